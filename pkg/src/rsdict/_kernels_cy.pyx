# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled query kernels; mirrors _kernels_py function for function."""

from libc.stdint cimport int64_t, uint8_t, uint32_t, uint64_t

BACKEND_NAME = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int rsd_pop64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int rsd_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int rsd_clz64(unsigned long long x) { return __builtin_clzll(x); }
    #else
    static inline int rsd_pop64(unsigned long long x) {
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
        return (int)((x * 0x0101010101010101ULL) >> 56);
    }
    static inline int rsd_ctz64(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c;
    }
    static inline int rsd_clz64(unsigned long long x) {
        int c = 0; while (!(x >> 63)) { x <<= 1; ++c; } return c;
    }
    #endif
    """
    int rsd_pop64(unsigned long long x) nogil
    int rsd_ctz64(unsigned long long x) nogil
    int rsd_clz64(unsigned long long x) nogil


# ---------------------------------------------------------------- bit basics

cdef inline int64_t _bitlen(int64_t v) nogil:
    if v <= 0:
        return 0
    return 64 - rsd_clz64(<unsigned long long>v)


cdef inline int64_t _get_bit(const uint64_t[::1] words, int64_t wb, int64_t i) nogil:
    return <int64_t>((words[wb + (i >> 6)] >> (i & 63)) & 1)


cdef inline int64_t _popcount_range(const uint64_t[::1] words, int64_t wb,
                                    int64_t start, int64_t length) nogil:
    if length <= 0:
        return 0
    cdef int64_t end = start + length
    cdef int64_t w0 = start >> 6
    cdef int64_t w1 = (end - 1) >> 6
    cdef uint64_t seg
    cdef int64_t total, w, tail
    if w0 == w1:
        seg = words[wb + w0] >> (start & 63)
        if length < 64:
            seg &= (<uint64_t>1 << length) - 1
        return rsd_pop64(seg)
    total = rsd_pop64(words[wb + w0] >> (start & 63))
    for w in range(w0 + 1, w1):
        total += rsd_pop64(words[wb + w])
    seg = words[wb + w1]
    tail = end & 63
    if tail:
        seg &= (<uint64_t>1 << tail) - 1
    return total + rsd_pop64(seg)


cdef inline uint64_t _read_bits(const uint64_t[::1] words, int64_t pos,
                                int64_t width) nogil:
    if width == 0:
        return 0
    cdef int64_t i = pos >> 6
    cdef int64_t off = pos & 63
    cdef uint64_t lo = words[i] >> off
    if off + width > 64:
        lo |= words[i + 1] << (64 - off)
    if width >= 64:
        return lo
    return lo & ((<uint64_t>1 << width) - 1)


cdef inline int64_t _select_in_word(uint64_t w, int64_t r) nogil:
    cdef int64_t pos = 0
    cdef int c
    while True:
        c = rsd_pop64(w & 0xFF)
        if c >= r:
            break
        r -= c
        w >>= 8
        pos += 8
    while True:
        if w & 1:
            r -= 1
            if r == 0:
                return pos
        w >>= 1
        pos += 1


def get_bit(const uint64_t[::1] words, i):
    return _get_bit(words, 0, i)


def popcount_range(const uint64_t[::1] words, start, length):
    return _popcount_range(words, 0, start, length)


def read_bits(const uint64_t[::1] words, pos, width):
    return _read_bits(words, pos, width)


def select_in_word(word, r):
    return _select_in_word(<uint64_t>word, r)


# ---------------------------------------------------------- enumerative code

cdef inline uint64_t _enum_encode(const uint64_t[:, ::1] binom, int64_t t,
                                  int64_t u, uint64_t block) nogil:
    cdef uint64_t off = 0
    cdef int64_t j = 0
    cdef int64_t p
    while block:
        p = rsd_ctz64(block)
        j += 1
        off += binom[p, j]
        block &= block - 1
    return off


cdef inline uint64_t _enum_decode(const uint64_t[:, ::1] binom, int64_t t,
                                  int64_t u, uint64_t offset) nogil:
    cdef uint64_t block = 0
    cdef int64_t pos = t - 1
    cdef uint64_t c
    while u > 0:
        c = binom[pos, u]
        if offset >= c:
            block |= <uint64_t>1 << pos
            offset -= c
            u -= 1
        pos -= 1
    return block


def enum_encode(const uint64_t[:, ::1] binom, t, u, block):
    return _enum_encode(binom, t, u, <uint64_t>block)


def enum_decode(const uint64_t[:, ::1] binom, t, u, offset):
    return _enum_decode(binom, t, u, <uint64_t>offset)


def enum_encode_many(const uint64_t[:, ::1] binom, t,
                     const uint64_t[::1] blocks, const int64_t[::1] us,
                     uint64_t[::1] out):
    cdef int64_t tt = t
    cdef int64_t i
    with nogil:
        for i in range(blocks.shape[0]):
            out[i] = _enum_encode(binom, tt, us[i], blocks[i])


def enum_roundtrip_all(const uint64_t[:, ::1] binom, t):
    cdef int64_t tt = t
    cdef int64_t bad = 0
    cdef int64_t u, blk
    cdef uint64_t off, b2
    with nogil:
        for u in range(tt + 1):
            for off in range(binom[tt, u]):
                b2 = _enum_decode(binom, tt, u, off)
                if rsd_pop64(b2) != u or _enum_encode(binom, tt, u, b2) != off:
                    bad += 1
        for blk in range(<int64_t>1 << tt):
            u = rsd_pop64(<uint64_t>blk)
            if _enum_decode(binom, tt, u,
                            _enum_encode(binom, tt, u, <uint64_t>blk)) != <uint64_t>blk:
                bad += 1
    return bad


# ------------------------------------------------------------------- plain

cdef inline int64_t _plain_rank1(const uint64_t[::1] words, int64_t wb,
                                 const uint64_t[::1] rl, int64_t rlb,
                                 const uint32_t[::1] rs, int64_t rsb,
                                 int64_t l, int64_t s, int64_t x) nogil:
    cdef int64_t j = x / l
    cdef int64_t q = x / s
    cdef int64_t base = q * s
    return (<int64_t>rl[rlb + j] + <int64_t>rs[rsb + q]
            + _popcount_range(words, wb, base, x - base + 1))


cdef inline int64_t _plain_select1(const uint64_t[::1] words, int64_t wb,
                                   const uint64_t[::1] rl, int64_t rlb,
                                   const uint32_t[::1] rs, int64_t rsb,
                                   int64_t l, int64_t s, int64_t n, int64_t m,
                                   int64_t i) nogil:
    cdef int64_t nlb = (n + l - 1) / l
    cdef int64_t lo = 0, hi = nlb, mid, j, rel, spb, nsb, q, qend
    cdef uint64_t w
    cdef int64_t c, avail, pos
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if <int64_t>rl[rlb + mid] < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - <int64_t>rl[rlb + j]
    spb = l / s
    nsb = (n + s - 1) / s
    q = j * spb
    qend = (j + 1) * spb
    if qend > nsb:
        qend = nsb
    while q + 1 < qend and <int64_t>rs[rsb + q + 1] < rel:
        q += 1
    rel -= <int64_t>rs[rsb + q]
    pos = q * s
    while True:
        w = words[wb + (pos >> 6)]
        if pos & 63:
            w >>= pos & 63
        avail = 64 - (pos & 63)
        c = rsd_pop64(w)
        if c >= rel:
            return pos + _select_in_word(w, rel)
        rel -= c
        pos += avail


cdef inline int64_t _plain_select0(const uint64_t[::1] words, int64_t wb,
                                   const uint64_t[::1] rl, int64_t rlb,
                                   const uint32_t[::1] rs, int64_t rsb,
                                   int64_t l, int64_t s, int64_t n, int64_t m,
                                   int64_t i) nogil:
    cdef int64_t nlb = (n + l - 1) / l
    cdef int64_t lo = 0, hi = nlb, mid, j, rel, spb, nsb, q, qend, lbstart, bnd
    cdef uint64_t w
    cdef int64_t c, pos
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        bnd = mid * l
        if bnd > n:
            bnd = n
        if bnd - <int64_t>rl[rlb + mid] < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    bnd = j * l
    if bnd > n:
        bnd = n
    rel = i - (bnd - <int64_t>rl[rlb + j])
    spb = l / s
    nsb = (n + s - 1) / s
    q = j * spb
    qend = (j + 1) * spb
    if qend > nsb:
        qend = nsb
    lbstart = j * l
    while q + 1 < qend and ((q + 1) * s - lbstart) - <int64_t>rs[rsb + q + 1] < rel:
        q += 1
    rel -= (q * s - lbstart) - <int64_t>rs[rsb + q]
    pos = q * s
    while True:
        w = ~words[wb + (pos >> 6)]
        if pos & 63:
            w >>= pos & 63
        c = rsd_pop64(w)
        if c >= rel:
            return pos + _select_in_word(w, rel)
        rel -= c
        pos += 64 - (pos & 63)


def plain_rank1(const uint64_t[::1] words, const uint64_t[::1] rl,
                const uint32_t[::1] rs, l, s, x):
    return _plain_rank1(words, 0, rl, 0, rs, 0, l, s, x)


def plain_select1(const uint64_t[::1] words, const uint64_t[::1] rl,
                  const uint32_t[::1] rs, l, s, n, m, i):
    return _plain_select1(words, 0, rl, 0, rs, 0, l, s, n, m, i)


def plain_select0(const uint64_t[::1] words, const uint64_t[::1] rl,
                  const uint32_t[::1] rs, l, s, n, m, i):
    return _plain_select0(words, 0, rl, 0, rs, 0, l, s, n, m, i)


def plain_rank1_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                     const uint32_t[::1] rs, l, s,
                     const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _plain_rank1(words, 0, rl, 0, rs, 0, ll, ss, xs[idx])


def plain_select1_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                       const uint32_t[::1] rs, l, s, n, m,
                       const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _plain_select1(words, 0, rl, 0, rs, 0, ll, ss, nn, mm, qs[idx])


def plain_select0_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                       const uint32_t[::1] rs, l, s, n, m,
                       const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _plain_select0(words, 0, rl, 0, rs, 0, ll, ss, nn, mm, qs[idx])


# --------------------------------------------------------------------- ent

cdef inline uint64_t _class_decode(const uint64_t[::1] code, int64_t pos,
                                   int64_t width, int64_t s, int64_t u,
                                   const int64_t[::1] taboff,
                                   const uint64_t[::1] tabdat,
                                   const uint64_t[:, ::1] binom) nogil:
    cdef uint64_t off
    cdef int64_t tb
    if u == 0:
        return 0
    if u == s:
        if s >= 64:
            return <uint64_t>0xFFFFFFFFFFFFFFFF
        return (<uint64_t>1 << s) - 1
    off = _read_bits(code, pos, width)
    tb = taboff[u]
    if tb >= 0:
        return tabdat[tb + <int64_t>off]
    return _enum_decode(binom, s, u, off)


cdef inline int64_t _ent_block(const uint64_t[::1] code, const uint64_t[::1] rl,
                               const uint32_t[::1] rs, const uint64_t[::1] lptr,
                               const uint32_t[::1] sptr,
                               const uint8_t[::1] lentab,
                               const int64_t[::1] taboff,
                               const uint64_t[::1] tabdat,
                               const uint64_t[:, ::1] binom,
                               int64_t l, int64_t s, int64_t n, int64_t m,
                               int64_t q, uint64_t *blk) nogil:
    cdef int64_t spb = l / s
    cdef int64_t j = q / spb
    cdef int64_t nsb = (n + s - 1) / s
    cdef int64_t cur = <int64_t>rl[j] + <int64_t>rs[q]
    cdef int64_t nxt, u
    if q + 1 >= nsb:
        nxt = m
    elif (q + 1) % spb == 0:
        nxt = <int64_t>rl[j + 1]
    else:
        nxt = <int64_t>rl[j] + <int64_t>rs[q + 1]
    u = nxt - cur
    blk[0] = _class_decode(code, <int64_t>lptr[j] + <int64_t>sptr[q],
                           lentab[u], s, u, taboff, tabdat, binom)
    return cur


cdef inline int64_t _ent_rank1(const uint64_t[::1] code, const uint64_t[::1] rl,
                               const uint32_t[::1] rs, const uint64_t[::1] lptr,
                               const uint32_t[::1] sptr,
                               const uint8_t[::1] lentab,
                               const int64_t[::1] taboff,
                               const uint64_t[::1] tabdat,
                               const uint64_t[:, ::1] binom,
                               int64_t l, int64_t s, int64_t n, int64_t m,
                               int64_t x) nogil:
    cdef int64_t q = x / s
    cdef uint64_t blk
    cdef int64_t cur = _ent_block(code, rl, rs, lptr, sptr, lentab, taboff,
                                  tabdat, binom, l, s, n, m, q, &blk)
    cdef int64_t nbits = x - q * s + 1
    if nbits < 64:
        blk &= (<uint64_t>1 << nbits) - 1
    return cur + rsd_pop64(blk)


cdef inline int64_t _ent_select1(const uint64_t[::1] code, const uint64_t[::1] rl,
                                 const uint32_t[::1] rs, const uint64_t[::1] lptr,
                                 const uint32_t[::1] sptr,
                                 const uint8_t[::1] lentab,
                                 const int64_t[::1] taboff,
                                 const uint64_t[::1] tabdat,
                                 const uint64_t[:, ::1] binom,
                                 int64_t l, int64_t s, int64_t n, int64_t m,
                                 int64_t i) nogil:
    cdef int64_t nlb = (n + l - 1) / l
    cdef int64_t lo = 0, hi = nlb, mid, j, rel, spb, nsb, q, qend
    cdef uint64_t blk
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if <int64_t>rl[mid] < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - <int64_t>rl[j]
    spb = l / s
    nsb = (n + s - 1) / s
    q = j * spb
    qend = (j + 1) * spb
    if qend > nsb:
        qend = nsb
    while q + 1 < qend and <int64_t>rs[q + 1] < rel:
        q += 1
    rel -= <int64_t>rs[q]
    _ent_block(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom,
               l, s, n, m, q, &blk)
    return q * s + _select_in_word(blk, rel)


cdef inline int64_t _ent_select0(const uint64_t[::1] code, const uint64_t[::1] rl,
                                 const uint32_t[::1] rs, const uint64_t[::1] lptr,
                                 const uint32_t[::1] sptr,
                                 const uint8_t[::1] lentab,
                                 const int64_t[::1] taboff,
                                 const uint64_t[::1] tabdat,
                                 const uint64_t[:, ::1] binom,
                                 int64_t l, int64_t s, int64_t n, int64_t m,
                                 int64_t i) nogil:
    cdef int64_t nlb = (n + l - 1) / l
    cdef int64_t lo = 0, hi = nlb, mid, j, rel, spb, nsb, q, qend, lbstart, bnd
    cdef int64_t s_real
    cdef uint64_t blk
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        bnd = mid * l
        if bnd > n:
            bnd = n
        if bnd - <int64_t>rl[mid] < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    bnd = j * l
    if bnd > n:
        bnd = n
    rel = i - (bnd - <int64_t>rl[j])
    spb = l / s
    nsb = (n + s - 1) / s
    q = j * spb
    qend = (j + 1) * spb
    if qend > nsb:
        qend = nsb
    lbstart = j * l
    while q + 1 < qend and ((q + 1) * s - lbstart) - <int64_t>rs[q + 1] < rel:
        q += 1
    rel -= (q * s - lbstart) - <int64_t>rs[q]
    _ent_block(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom,
               l, s, n, m, q, &blk)
    s_real = s
    if n - q * s < s_real:
        s_real = n - q * s
    blk = ~blk
    if s_real < 64:
        blk &= (<uint64_t>1 << s_real) - 1
    return q * s + _select_in_word(blk, rel)


def ent_rank1(const uint64_t[::1] code, const uint64_t[::1] rl,
              const uint32_t[::1] rs, const uint64_t[::1] lptr,
              const uint32_t[::1] sptr, const uint8_t[::1] lentab,
              const int64_t[::1] taboff, const uint64_t[::1] tabdat,
              const uint64_t[:, ::1] binom, l, s, n, m, x):
    return _ent_rank1(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom,
                      l, s, n, m, x)


def ent_select1(const uint64_t[::1] code, const uint64_t[::1] rl,
                const uint32_t[::1] rs, const uint64_t[::1] lptr,
                const uint32_t[::1] sptr, const uint8_t[::1] lentab,
                const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                const uint64_t[:, ::1] binom, l, s, n, m, i):
    return _ent_select1(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom,
                        l, s, n, m, i)


def ent_select0(const uint64_t[::1] code, const uint64_t[::1] rl,
                const uint32_t[::1] rs, const uint64_t[::1] lptr,
                const uint32_t[::1] sptr, const uint8_t[::1] lentab,
                const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                const uint64_t[:, ::1] binom, l, s, n, m, i):
    return _ent_select0(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom,
                        l, s, n, m, i)


def ent_rank1_many(const uint64_t[::1] code, const uint64_t[::1] rl,
                   const uint32_t[::1] rs, const uint64_t[::1] lptr,
                   const uint32_t[::1] sptr, const uint8_t[::1] lentab,
                   const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                   const uint64_t[:, ::1] binom, l, s, n, m,
                   const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _ent_rank1(code, rl, rs, lptr, sptr, lentab, taboff,
                                  tabdat, binom, ll, ss, nn, mm, xs[idx])


def ent_select1_many(const uint64_t[::1] code, const uint64_t[::1] rl,
                     const uint32_t[::1] rs, const uint64_t[::1] lptr,
                     const uint32_t[::1] sptr, const uint8_t[::1] lentab,
                     const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                     const uint64_t[:, ::1] binom, l, s, n, m,
                     const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _ent_select1(code, rl, rs, lptr, sptr, lentab, taboff,
                                    tabdat, binom, ll, ss, nn, mm, qs[idx])


def ent_select0_many(const uint64_t[::1] code, const uint64_t[::1] rl,
                     const uint32_t[::1] rs, const uint64_t[::1] lptr,
                     const uint32_t[::1] sptr, const uint8_t[::1] lentab,
                     const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                     const uint64_t[:, ::1] binom, l, s, n, m,
                     const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _ent_select0(code, rl, rs, lptr, sptr, lentab, taboff,
                                    tabdat, binom, ll, ss, nn, mm, qs[idx])


# --------------------------------------------------------------------- esp

cdef inline int64_t _fx_estimate(const int64_t[::1] fxu, const int64_t[::1] fxd,
                                 int64_t n, int64_t m) nogil:
    if m <= 0 or m >= n:
        return 0
    cdef int64_t a = fxu[n]
    cdef int64_t v = m * (a - fxd[m]) + (n - m) * (a - fxd[n - m])
    return (v + 65535) >> 16


def fx_estimate(const int64_t[::1] fxu, const int64_t[::1] fxd, big_n, big_m):
    return _fx_estimate(fxu, fxd, big_n, big_m)


cdef inline int64_t _esp_rl(const uint64_t[::1] rlw, int64_t base, int64_t wl,
                            int64_t dslb, int64_t lb_per, int64_t t) nogil:
    if t == 0:
        return 0
    if t >= lb_per:
        return dslb
    return <int64_t>_read_bits(rlw, base + (t - 1) * wl, wl)


cdef inline int64_t _esp_rank1(const uint64_t[::1] code, const uint64_t[::1] slp,
                               const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                               const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                               const uint64_t[::1] rsbase,
                               const int64_t[::1] fxu, const int64_t[::1] fxd,
                               const uint8_t[::1] lentab,
                               const int64_t[::1] taboff,
                               const uint64_t[::1] tabdat,
                               const uint64_t[:, ::1] binom,
                               int64_t k, int64_t l, int64_t s, int64_t slack,
                               int64_t n, int64_t x) nogil:
    cdef int64_t sigma = x / k
    cdef int64_t xk = x - sigma * k
    cdef int64_t t = xk / l
    cdef int64_t xl = xk - t * l
    cdef int64_t jj = xl / s
    cdef int64_t xoff = xl - jj * s
    cdef int64_t lb_per = k / l
    cdef int64_t spb = l / s
    cdef int64_t dslb = <int64_t>rslb[sigma + 1] - <int64_t>rslb[sigma]
    cdef int64_t wl = _bitlen(dslb)
    cdef int64_t rlb = <int64_t>rlbase[sigma]
    cdef int64_t lr = _esp_rl(rlw, rlb, wl, dslb, lb_per, t)
    cdef int64_t rsoff = <int64_t>rsbase[sigma]
    cdef int64_t prev = 0, cur, tau
    for tau in range(t):
        cur = _esp_rl(rlw, rlb, wl, dslb, lb_per, tau + 1)
        rsoff += (spb - 1) * _bitlen(cur - prev)
        prev = cur
    cdef int64_t dlb = _esp_rl(rlw, rlb, wl, dslb, lb_per, t + 1) - lr
    cdef int64_t wt = _bitlen(dlb)
    cdef int64_t sr = 0, nx = dlb
    if jj > 0:
        sr = <int64_t>_read_bits(rsw, rsoff + (jj - 1) * wt, wt)
    if jj + 1 < spb:
        nx = <int64_t>_read_bits(rsw, rsoff + jj * wt, wt)
    cdef int64_t u = nx - sr
    cdef int64_t pos = (<int64_t>slp[sigma]
                        + _fx_estimate(fxu, fxd, t * l, lr)
                        + _fx_estimate(fxu, fxd, jj * s, sr)
                        + slack * (t * spb + jj))
    cdef uint64_t blk = _class_decode(code, pos, lentab[u], s, u,
                                      taboff, tabdat, binom)
    cdef int64_t nbits = xoff + 1
    if nbits < 64:
        blk &= (<uint64_t>1 << nbits) - 1
    return <int64_t>rslb[sigma] + lr + sr + rsd_pop64(blk)


cdef inline int64_t _esp_locate(const uint64_t[::1] code, const uint64_t[::1] slp,
                                const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                                const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                                const uint64_t[::1] rsbase,
                                const int64_t[::1] fxu, const int64_t[::1] fxd,
                                const uint8_t[::1] lentab,
                                const int64_t[::1] taboff,
                                const uint64_t[::1] tabdat,
                                const uint64_t[:, ::1] binom,
                                int64_t k, int64_t l, int64_t s, int64_t slack,
                                int64_t n, int64_t i, bint zeros) nogil:
    cdef int64_t nslb = rslb.shape[0] - 1
    cdef int64_t lo = 0, hi = nslb - 1, mid, have, bnd
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if zeros:
            bnd = mid * k
            if bnd > n:
                bnd = n
            have = bnd - <int64_t>rslb[mid]
        else:
            have = <int64_t>rslb[mid]
        if have < i:
            lo = mid
        else:
            hi = mid - 1
    cdef int64_t sigma = lo
    cdef int64_t base
    if zeros:
        bnd = sigma * k
        if bnd > n:
            bnd = n
        base = bnd - <int64_t>rslb[sigma]
    else:
        base = <int64_t>rslb[sigma]
    cdef int64_t rel = i - base
    cdef int64_t lb_per = k / l
    cdef int64_t spb = l / s
    cdef int64_t dslb = <int64_t>rslb[sigma + 1] - <int64_t>rslb[sigma]
    cdef int64_t wl = _bitlen(dslb)
    cdef int64_t rlb = <int64_t>rlbase[sigma]
    cdef int64_t sbase = sigma * k
    cdef int64_t t = 0, nxt
    cdef int64_t rsoff = <int64_t>rsbase[sigma]
    cdef int64_t prev = 0
    while t + 1 < lb_per and sbase + (t + 1) * l < n:
        nxt = _esp_rl(rlw, rlb, wl, dslb, lb_per, t + 1)
        if zeros:
            have = (t + 1) * l - nxt
        else:
            have = nxt
        if have >= rel:
            break
        rsoff += (spb - 1) * _bitlen(nxt - prev)
        prev = nxt
        t += 1
    cdef int64_t lr = _esp_rl(rlw, rlb, wl, dslb, lb_per, t)
    if zeros:
        rel -= t * l - lr
    else:
        rel -= lr
    cdef int64_t dlb = _esp_rl(rlw, rlb, wl, dslb, lb_per, t + 1) - lr
    cdef int64_t wt = _bitlen(dlb)
    cdef int64_t lbstart = sbase + t * l
    cdef int64_t jj = 0
    while jj + 1 < spb and lbstart + (jj + 1) * s < n:
        nxt = <int64_t>_read_bits(rsw, rsoff + jj * wt, wt)
        if zeros:
            have = (jj + 1) * s - nxt
        else:
            have = nxt
        if have >= rel:
            break
        jj += 1
    cdef int64_t sr = 0, nx = dlb
    if jj > 0:
        sr = <int64_t>_read_bits(rsw, rsoff + (jj - 1) * wt, wt)
    if jj + 1 < spb:
        nx = <int64_t>_read_bits(rsw, rsoff + jj * wt, wt)
    if zeros:
        rel -= jj * s - sr
    else:
        rel -= sr
    cdef int64_t u = nx - sr
    cdef int64_t pos = (<int64_t>slp[sigma]
                        + _fx_estimate(fxu, fxd, t * l, lr)
                        + _fx_estimate(fxu, fxd, jj * s, sr)
                        + slack * (t * spb + jj))
    cdef uint64_t blk = _class_decode(code, pos, lentab[u], s, u,
                                      taboff, tabdat, binom)
    cdef int64_t sbstart = lbstart + jj * s
    cdef int64_t s_real
    if zeros:
        s_real = s
        if n - sbstart < s_real:
            s_real = n - sbstart
        blk = ~blk
        if s_real < 64:
            blk &= (<uint64_t>1 << s_real) - 1
    return sbstart + _select_in_word(blk, rel)


def esp_rank1(const uint64_t[::1] code, const uint64_t[::1] slp,
              const uint64_t[::1] rslb, const uint64_t[::1] rlw,
              const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
              const uint64_t[::1] rsbase, const int64_t[::1] fxu,
              const int64_t[::1] fxd, const uint8_t[::1] lentab,
              const int64_t[::1] taboff, const uint64_t[::1] tabdat,
              const uint64_t[:, ::1] binom, k, l, s, slack, n, x):
    return _esp_rank1(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                      lentab, taboff, tabdat, binom, k, l, s, slack, n, x)


def esp_select1(const uint64_t[::1] code, const uint64_t[::1] slp,
                const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                const uint64_t[::1] rsbase, const int64_t[::1] fxu,
                const int64_t[::1] fxd, const uint8_t[::1] lentab,
                const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                const uint64_t[:, ::1] binom, k, l, s, slack, n, i):
    return _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                       lentab, taboff, tabdat, binom, k, l, s, slack, n, i, False)


def esp_select0(const uint64_t[::1] code, const uint64_t[::1] slp,
                const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                const uint64_t[::1] rsbase, const int64_t[::1] fxu,
                const int64_t[::1] fxd, const uint8_t[::1] lentab,
                const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                const uint64_t[:, ::1] binom, k, l, s, slack, n, i):
    return _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                       lentab, taboff, tabdat, binom, k, l, s, slack, n, i, True)


def esp_rank1_many(const uint64_t[::1] code, const uint64_t[::1] slp,
                   const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                   const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                   const uint64_t[::1] rsbase, const int64_t[::1] fxu,
                   const int64_t[::1] fxd, const uint8_t[::1] lentab,
                   const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                   const uint64_t[:, ::1] binom, k, l, s, slack, n,
                   const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t kk = k, ll = l, ss = s, sl = slack, nn = n, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _esp_rank1(code, slp, rslb, rlw, rlbase, rsw, rsbase,
                                  fxu, fxd, lentab, taboff, tabdat, binom,
                                  kk, ll, ss, sl, nn, xs[idx])


def esp_select1_many(const uint64_t[::1] code, const uint64_t[::1] slp,
                     const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                     const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                     const uint64_t[::1] rsbase, const int64_t[::1] fxu,
                     const int64_t[::1] fxd, const uint8_t[::1] lentab,
                     const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                     const uint64_t[:, ::1] binom, k, l, s, slack, n,
                     const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t kk = k, ll = l, ss = s, sl = slack, nn = n, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase,
                                   fxu, fxd, lentab, taboff, tabdat, binom,
                                   kk, ll, ss, sl, nn, qs[idx], False)


def esp_select0_many(const uint64_t[::1] code, const uint64_t[::1] slp,
                     const uint64_t[::1] rslb, const uint64_t[::1] rlw,
                     const uint64_t[::1] rlbase, const uint64_t[::1] rsw,
                     const uint64_t[::1] rsbase, const int64_t[::1] fxu,
                     const int64_t[::1] fxd, const uint8_t[::1] lentab,
                     const int64_t[::1] taboff, const uint64_t[::1] tabdat,
                     const uint64_t[:, ::1] binom, k, l, s, slack, n,
                     const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t kk = k, ll = l, ss = s, sl = slack, nn = n, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase,
                                   fxu, fxd, lentab, taboff, tabdat, binom,
                                   kk, ll, ss, sl, nn, qs[idx], True)


# ----------------------------------------------------------------- recrank

cdef inline int64_t _rr_rank1(const uint64_t[::1] words, const uint64_t[::1] rl,
                              const uint32_t[::1] rs, const int64_t[::1] woff,
                              const int64_t[::1] rloff, const int64_t[::1] rsoff,
                              const int64_t[::1] tarr, const int64_t[::1] nbits,
                              int64_t nlev, int64_t l, int64_t s, int64_t x) nogil:
    cdef int64_t lv, t, b, r, wb
    for lv in range(nlev):
        t = tarr[lv]
        b = x / t
        wb = woff[lv]
        r = _plain_rank1(words, wb, rl, rloff[lv], rs, rsoff[lv], l, s, b)
        if (words[wb + (b >> 6)] >> (b & 63)) & 1:
            x = (r - 1) * t + (x - b * t)
        else:
            if r == 0:
                return 0
            x = r * t - 1
    return _plain_rank1(words, woff[nlev], rl, rloff[nlev], rs, rsoff[nlev], l, s, x)


cdef inline int64_t _rr_select1(const uint64_t[::1] words, const uint64_t[::1] rl,
                                const uint32_t[::1] rs, const int64_t[::1] woff,
                                const int64_t[::1] rloff, const int64_t[::1] rsoff,
                                const int64_t[::1] tarr, const int64_t[::1] nbits,
                                int64_t nlev, int64_t l, int64_t s, int64_t m,
                                int64_t i) nogil:
    cdef int64_t e = _plain_select1(words, woff[nlev], rl, rloff[nlev],
                                    rs, rsoff[nlev], l, s, nbits[nlev], m, i)
    cdef int64_t lv, t, j, b
    for lv in range(nlev - 1, -1, -1):
        t = tarr[lv]
        j = e / t
        b = _plain_select1(words, woff[lv], rl, rloff[lv], rs, rsoff[lv],
                           l, s, nbits[lv], 0, j + 1)
        e = b * t + (e - j * t)
    return e


cdef inline int64_t _rr_select0(const uint64_t[::1] words, const uint64_t[::1] rl,
                                const uint32_t[::1] rs, const int64_t[::1] woff,
                                const int64_t[::1] rloff, const int64_t[::1] rsoff,
                                const int64_t[::1] tarr, const int64_t[::1] nbits,
                                int64_t nlev, int64_t l, int64_t s, int64_t n,
                                int64_t m, int64_t i) nogil:
    cdef int64_t lo = 0, hi = n - 1, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if mid + 1 - _rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits,
                               nlev, l, s, mid) < i:
            lo = mid + 1
        else:
            hi = mid
    return lo


def rr_rank1(const uint64_t[::1] words, const uint64_t[::1] rl,
             const uint32_t[::1] rs, const int64_t[::1] woff,
             const int64_t[::1] rloff, const int64_t[::1] rsoff,
             const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s, x):
    return _rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, x)


def rr_select1(const uint64_t[::1] words, const uint64_t[::1] rl,
               const uint32_t[::1] rs, const int64_t[::1] woff,
               const int64_t[::1] rloff, const int64_t[::1] rsoff,
               const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s, m, i):
    return _rr_select1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, m, i)


def rr_select0(const uint64_t[::1] words, const uint64_t[::1] rl,
               const uint32_t[::1] rs, const int64_t[::1] woff,
               const int64_t[::1] rloff, const int64_t[::1] rsoff,
               const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s, n, m, i):
    return _rr_select0(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev,
                       l, s, n, m, i)


def rr_rank1_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                  const uint32_t[::1] rs, const int64_t[::1] woff,
                  const int64_t[::1] rloff, const int64_t[::1] rsoff,
                  const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s,
                  const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t nl = nlev, ll = l, ss = s, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits,
                                 nl, ll, ss, xs[idx])


def rr_select1_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                    const uint32_t[::1] rs, const int64_t[::1] woff,
                    const int64_t[::1] rloff, const int64_t[::1] rsoff,
                    const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s, m,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t nl = nlev, ll = l, ss = s, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _rr_select1(words, rl, rs, woff, rloff, rsoff, tarr, nbits,
                                   nl, ll, ss, mm, qs[idx])


def rr_select0_many(const uint64_t[::1] words, const uint64_t[::1] rl,
                    const uint32_t[::1] rs, const int64_t[::1] woff,
                    const int64_t[::1] rloff, const int64_t[::1] rsoff,
                    const int64_t[::1] tarr, const int64_t[::1] nbits, nlev, l, s, n, m,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t nl = nlev, ll = l, ss = s, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _rr_select0(words, rl, rs, woff, rloff, rsoff, tarr, nbits,
                                   nl, ll, ss, nn, mm, qs[idx])


# ------------------------------------------------------------------- vcode

cdef inline int64_t _vc_plane_off(const uint8_t[::1] tarr, const uint64_t[::1] offs,
                                  const uint64_t[::1] anchors, int64_t mode,
                                  int64_t pbytes, int64_t b) nogil:
    cdef int64_t off, bb
    if mode == 0:
        return <int64_t>offs[b]
    off = <int64_t>anchors[b >> 5]
    for bb in range(b & ~<int64_t>31, b):
        off += <int64_t>tarr[bb] * pbytes
    return off


cdef inline int64_t _vc_select1(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                                const uint8_t[::1] planes, const uint64_t[::1] offs,
                                const uint64_t[::1] anchors, int64_t mode,
                                int64_t p, int64_t m, int64_t i) nogil:
    cdef int64_t idx = i - 1
    cdef int64_t b = idx / p
    cdef int64_t q = idx - b * p
    cdef int64_t pbytes = p >> 3
    cdef int64_t res = sarr[b] + q + 1
    cdef int64_t tb = tarr[b]
    if tb == 0:
        return res
    cdef int64_t off = _vc_plane_off(tarr, offs, anchors, mode, pbytes, b)
    cdef int64_t nby = q >> 3
    cdef uint64_t tailmask = (<uint64_t>1 << ((q & 7) + 1)) - 1
    cdef int64_t j, by, base, c
    for j in range(tb):
        base = off + j * pbytes
        c = 0
        for by in range(nby):
            c += rsd_pop64(planes[base + by])
        c += rsd_pop64(planes[base + nby] & tailmask)
        res += c << j
    return res


cdef inline int64_t _vc_rank1(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                              const uint8_t[::1] planes, const uint64_t[::1] offs,
                              const uint64_t[::1] anchors, int64_t mode,
                              int64_t p, int64_t n, int64_t m, int64_t x) nogil:
    cdef int64_t lo = 1, hi = m, best = 0, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if _vc_select1(sarr, tarr, planes, offs, anchors, mode, p, m, mid) <= x:
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return best


cdef inline int64_t _vc_select0(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                                const uint8_t[::1] planes, const uint64_t[::1] offs,
                                const uint64_t[::1] anchors, int64_t mode,
                                int64_t p, int64_t n, int64_t m, int64_t i) nogil:
    cdef int64_t lo = 0, hi = n - 1, mid, r0
    while lo < hi:
        mid = (lo + hi) >> 1
        r0 = mid + 1 - _vc_rank1(sarr, tarr, planes, offs, anchors, mode, p, n, m, mid)
        if r0 < i:
            lo = mid + 1
        else:
            hi = mid
    return lo


def vc_select1(const int64_t[::1] sarr, const uint8_t[::1] tarr,
               const uint8_t[::1] planes, const uint64_t[::1] offs,
               const uint64_t[::1] anchors, mode, p, m, i):
    return _vc_select1(sarr, tarr, planes, offs, anchors, mode, p, m, i)


def vc_rank1(const int64_t[::1] sarr, const uint8_t[::1] tarr,
             const uint8_t[::1] planes, const uint64_t[::1] offs,
             const uint64_t[::1] anchors, mode, p, n, m, x):
    return _vc_rank1(sarr, tarr, planes, offs, anchors, mode, p, n, m, x)


def vc_select0(const int64_t[::1] sarr, const uint8_t[::1] tarr,
               const uint8_t[::1] planes, const uint64_t[::1] offs,
               const uint64_t[::1] anchors, mode, p, n, m, i):
    return _vc_select0(sarr, tarr, planes, offs, anchors, mode, p, n, m, i)


def vc_select1_many(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                    const uint8_t[::1] planes, const uint64_t[::1] offs,
                    const uint64_t[::1] anchors, mode, p, m,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t md = mode, pp = p, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _vc_select1(sarr, tarr, planes, offs, anchors, md, pp, mm, qs[idx])


def vc_rank1_many(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                  const uint8_t[::1] planes, const uint64_t[::1] offs,
                  const uint64_t[::1] anchors, mode, p, n, m,
                  const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t md = mode, pp = p, nn = n, mm = m, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _vc_rank1(sarr, tarr, planes, offs, anchors, md, pp, nn, mm, xs[idx])


def vc_select0_many(const int64_t[::1] sarr, const uint8_t[::1] tarr,
                    const uint8_t[::1] planes, const uint64_t[::1] offs,
                    const uint64_t[::1] anchors, mode, p, n, m,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t md = mode, pp = p, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _vc_select0(sarr, tarr, planes, offs, anchors, md, pp, nn, mm, qs[idx])


# ----------------------------------------------------------------- sdarray

cdef inline uint64_t _da_word(const uint64_t[::1] words, int64_t n, bint invert,
                              int64_t widx) nogil:
    cdef uint64_t w = words[widx]
    cdef int64_t tail
    if invert:
        w = ~w
        tail = n - (widx << 6)
        if tail < 64:
            w &= (<uint64_t>1 << tail) - 1
    return w


cdef inline int64_t _da_select(const uint64_t[::1] words, int64_t n, bint invert,
                               const int64_t[::1] pl, const uint8_t[::1] flags,
                               const int64_t[::1] sl, const int64_t[::1] slbase,
                               const uint32_t[::1] ss, const int64_t[::1] ssbase,
                               int64_t L, int64_t L2, int64_t L3, int64_t i) nogil:
    cdef int64_t b = (i - 1) / L
    cdef int64_t q = (i - 1) - b * L
    cdef int64_t sidx, pos, rem, cur, widx, c
    cdef uint64_t w
    if flags[b]:
        return sl[slbase[b] + q]
    sidx = q / L3
    pos = pl[b] + <int64_t>ss[ssbase[b] + sidx]
    rem = q - sidx * L3
    if rem == 0:
        return pos
    cur = pos + 1
    widx = cur >> 6
    w = _da_word(words, n, invert, widx) >> (cur & 63)
    while True:
        c = rsd_pop64(w)
        if c >= rem:
            return cur + _select_in_word(w, rem)
        rem -= c
        widx += 1
        cur = widx << 6
        w = _da_word(words, n, invert, widx)


def da_select(const uint64_t[::1] words, n, invert, const int64_t[::1] pl,
              const uint8_t[::1] flags, const int64_t[::1] sl,
              const int64_t[::1] slbase, const uint32_t[::1] ss,
              const int64_t[::1] ssbase, L, L2, L3, i):
    return _da_select(words, n, invert, pl, flags, sl, slbase, ss, ssbase,
                      L, L2, L3, i)


def da_select_many(const uint64_t[::1] words, n, invert, const int64_t[::1] pl,
                   const uint8_t[::1] flags, const int64_t[::1] sl,
                   const int64_t[::1] slbase, const uint32_t[::1] ss,
                   const int64_t[::1] ssbase, L, L2, L3,
                   const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t nn = n, LL = L, LL2 = L2, LL3 = L3, idx
    cdef bint inv = invert
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _da_select(words, nn, inv, pl, flags, sl, slbase, ss,
                                  ssbase, LL, LL2, LL3, qs[idx])


cdef inline int64_t _sa_select1(const uint64_t[::1] hwords, int64_t hlen,
                                const int64_t[::1] pl, const uint8_t[::1] flags,
                                const int64_t[::1] sl, const int64_t[::1] slbase,
                                const uint32_t[::1] ss, const int64_t[::1] ssbase,
                                int64_t L, int64_t L2, int64_t L3,
                                const uint64_t[::1] lo, int64_t w, int64_t i) nogil:
    cdef int64_t hpos = _da_select(hwords, hlen, 0, pl, flags, sl, slbase, ss,
                                   ssbase, L, L2, L3, i)
    return ((hpos - (i - 1)) << w) | <int64_t>_read_bits(lo, (i - 1) * w, w)


cdef inline int64_t _sa_rank1(const uint64_t[::1] hwords, int64_t hlen,
                              const int64_t[::1] pl0, const uint8_t[::1] flags0,
                              const int64_t[::1] sl0, const int64_t[::1] slbase0,
                              const uint32_t[::1] ss0, const int64_t[::1] ssbase0,
                              int64_t L, int64_t L2, int64_t L3,
                              const uint64_t[::1] lo, int64_t w, int64_t m,
                              int64_t x) nogil:
    cdef int64_t h = x >> w
    cdef int64_t xl = x & ((<int64_t>1 << w) - 1)
    cdef int64_t y, kk
    if h == 0:
        y = 0
        kk = 0
    else:
        y = _da_select(hwords, hlen, 1, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                       L, L2, L3, h) + 1
        kk = y - h
    while y < hlen and ((hwords[y >> 6] >> (y & 63)) & 1):
        if <int64_t>_read_bits(lo, kk * w, w) > xl:
            break
        kk += 1
        y += 1
    return kk


cdef inline int64_t _sa_select0(const uint64_t[::1] hwords, int64_t hlen,
                                const int64_t[::1] pl0, const uint8_t[::1] flags0,
                                const int64_t[::1] sl0, const int64_t[::1] slbase0,
                                const uint32_t[::1] ss0, const int64_t[::1] ssbase0,
                                int64_t L, int64_t L2, int64_t L3,
                                const uint64_t[::1] lo, int64_t w, int64_t n,
                                int64_t m, int64_t i) nogil:
    cdef int64_t lo_x = 0, hi_x = n - 1, mid, r0
    while lo_x < hi_x:
        mid = (lo_x + hi_x) >> 1
        r0 = mid + 1 - _sa_rank1(hwords, hlen, pl0, flags0, sl0, slbase0, ss0,
                                 ssbase0, L, L2, L3, lo, w, m, mid)
        if r0 < i:
            lo_x = mid + 1
        else:
            hi_x = mid
    return lo_x


def sa_select1(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl,
               const uint8_t[::1] flags, const int64_t[::1] sl,
               const int64_t[::1] slbase, const uint32_t[::1] ss,
               const int64_t[::1] ssbase, L, L2, L3,
               const uint64_t[::1] lo, w, i):
    return _sa_select1(hwords, hlen, pl, flags, sl, slbase, ss, ssbase,
                       L, L2, L3, lo, w, i)


def sa_rank1(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl0,
             const uint8_t[::1] flags0, const int64_t[::1] sl0,
             const int64_t[::1] slbase0, const uint32_t[::1] ss0,
             const int64_t[::1] ssbase0, L, L2, L3,
             const uint64_t[::1] lo, w, m, x):
    return _sa_rank1(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                     L, L2, L3, lo, w, m, x)


def sa_select0(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl0,
               const uint8_t[::1] flags0, const int64_t[::1] sl0,
               const int64_t[::1] slbase0, const uint32_t[::1] ss0,
               const int64_t[::1] ssbase0, L, L2, L3,
               const uint64_t[::1] lo, w, n, m, i):
    return _sa_select0(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                       L, L2, L3, lo, w, n, m, i)


def sa_select1_many(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl,
                    const uint8_t[::1] flags, const int64_t[::1] sl,
                    const int64_t[::1] slbase, const uint32_t[::1] ss,
                    const int64_t[::1] ssbase, L, L2, L3,
                    const uint64_t[::1] lo, w,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t hl = hlen, LL = L, LL2 = L2, LL3 = L3, ww = w, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _sa_select1(hwords, hl, pl, flags, sl, slbase, ss, ssbase,
                                   LL, LL2, LL3, lo, ww, qs[idx])


def sa_rank1_many(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl0,
                  const uint8_t[::1] flags0, const int64_t[::1] sl0,
                  const int64_t[::1] slbase0, const uint32_t[::1] ss0,
                  const int64_t[::1] ssbase0, L, L2, L3,
                  const uint64_t[::1] lo, w, m,
                  const int64_t[::1] xs, int64_t[::1] out):
    cdef int64_t hl = hlen, LL = L, LL2 = L2, LL3 = L3, ww = w, mm = m, idx
    with nogil:
        for idx in range(xs.shape[0]):
            out[idx] = _sa_rank1(hwords, hl, pl0, flags0, sl0, slbase0, ss0,
                                 ssbase0, LL, LL2, LL3, lo, ww, mm, xs[idx])


def sa_select0_many(const uint64_t[::1] hwords, hlen, const int64_t[::1] pl0,
                    const uint8_t[::1] flags0, const int64_t[::1] sl0,
                    const int64_t[::1] slbase0, const uint32_t[::1] ss0,
                    const int64_t[::1] ssbase0, L, L2, L3,
                    const uint64_t[::1] lo, w, n, m,
                    const int64_t[::1] qs, int64_t[::1] out):
    cdef int64_t hl = hlen, LL = L, LL2 = L2, LL3 = L3, ww = w, nn = n, mm = m, idx
    with nogil:
        for idx in range(qs.shape[0]):
            out[idx] = _sa_select0(hwords, hl, pl0, flags0, sl0, slbase0, ss0,
                                   ssbase0, LL, LL2, LL3, lo, ww, nn, mm, qs[idx])
