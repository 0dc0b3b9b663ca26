"""Pure-Python query kernels.

Reference implementation of the hot paths.  The compiled backend
(_kernels_cy) mirrors every public function here with an identical signature;
tests assert the two agree.  Arrays are numpy buffers owned by the structure
objects; scalars are Python ints.  Values are converted with int() at the
boundary so no numpy integer promotion rules leak into the arithmetic.
"""
from __future__ import annotations

BACKEND_NAME = "pure"


# ---------------------------------------------------------------- bit basics

def get_bit(words, i):
    return (int(words[i >> 6]) >> (i & 63)) & 1


def popcount_range(words, start, length):
    if length <= 0:
        return 0
    end = start + length
    w0 = start >> 6
    w1 = (end - 1) >> 6
    if w0 == w1:
        seg = (int(words[w0]) >> (start & 63)) & ((1 << length) - 1)
        return seg.bit_count()
    total = (int(words[w0]) >> (start & 63)).bit_count()
    for w in range(w0 + 1, w1):
        total += int(words[w]).bit_count()
    last = int(words[w1])
    tail = end & 63
    if tail:
        last &= (1 << tail) - 1
    return total + last.bit_count()


def read_bits(words, pos, width):
    if width == 0:
        return 0
    off = pos & 63
    i = pos >> 6
    lo = int(words[i]) >> off
    if off + width > 64:
        lo |= int(words[i + 1]) << (64 - off)
    if width >= 64:
        return lo & 0xFFFFFFFFFFFFFFFF
    return lo & ((1 << width) - 1)


def select_in_word(word, r):
    """Offset of the r-th set bit (1-based) of word; word must have >= r ones."""
    w = int(word)
    for _ in range(r - 1):
        w &= w - 1
    return (w & -w).bit_length() - 1


# ---------------------------------------------------------- enumerative code

def enum_encode(binom, t, u, block):
    off = 0
    j = 0
    b = int(block)
    while b:
        p = (b & -b).bit_length() - 1
        j += 1
        off += int(binom[p, j])
        b &= b - 1
    return off


def enum_decode(binom, t, u, offset):
    off = int(offset)
    uu = int(u)
    block = 0
    pos = t - 1
    while uu > 0:
        c = int(binom[pos, uu])
        if off >= c:
            block |= 1 << pos
            off -= c
            uu -= 1
        pos -= 1
    return block


def enum_encode_many(binom, t, blocks, us, out):
    for i in range(len(blocks)):
        out[i] = enum_encode(binom, t, int(us[i]), int(blocks[i]))


def enum_roundtrip_all(binom, t):
    """Exhaustively re-encode every decode over all classes; returns #mismatches."""
    bad = 0
    for u in range(t + 1):
        for off in range(int(binom[t, u])):
            blk = enum_decode(binom, t, u, off)
            if blk.bit_count() != u or enum_encode(binom, t, u, blk) != off:
                bad += 1
    for blk in range(1 << t):
        u = blk.bit_count()
        if enum_decode(binom, t, u, enum_encode(binom, t, u, blk)) != blk:
            bad += 1
    return bad


# ------------------------------------------------------------------- plain

def _plain_rank1(words, wb, rl, rlb, rs, rsb, l, s, x):
    j = x // l
    q = x // s
    base = q * s
    return (
        int(rl[rlb + j])
        + int(rs[rsb + q])
        + popcount_range(words[wb:], base, x - base + 1)
    )


def plain_rank1(words, rl, rs, l, s, x):
    return _plain_rank1(words, 0, rl, 0, rs, 0, l, s, x)


def _plain_select1(words, wb, rl, rlb, rs, rsb, l, s, n, m, i):
    nlb = (n + l - 1) // l
    lo, hi = 0, nlb
    # largest j with rl[j] < i
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if int(rl[rlb + mid]) < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - int(rl[rlb + j])
    spb = l // s
    nsb = (n + s - 1) // s
    q = j * spb
    qend = min((j + 1) * spb, nsb)
    while q + 1 < qend and int(rs[rsb + q + 1]) < rel:
        q += 1
    rel -= int(rs[rsb + q])
    pos = q * s
    while True:
        w = int(words[wb + (pos >> 6)])
        if pos & 63:
            w >>= pos & 63
        avail = 64 - (pos & 63)
        c = w.bit_count()
        if c >= rel:
            return pos + select_in_word(w, rel)
        rel -= c
        pos += avail


def plain_select1(words, rl, rs, l, s, n, m, i):
    return _plain_select1(words, 0, rl, 0, rs, 0, l, s, n, m, i)


def _plain_select0(words, wb, rl, rlb, rs, rsb, l, s, n, m, i):
    nlb = (n + l - 1) // l
    lo, hi = 0, nlb
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if min(mid * l, n) - int(rl[rlb + mid]) < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - (min(j * l, n) - int(rl[rlb + j]))
    spb = l // s
    nsb = (n + s - 1) // s
    q = j * spb
    qend = min((j + 1) * spb, nsb)
    lbstart = j * l
    while q + 1 < qend and ((q + 1) * s - lbstart) - int(rs[rsb + q + 1]) < rel:
        q += 1
    rel -= (q * s - lbstart) - int(rs[rsb + q])
    pos = q * s
    while True:
        w = (~int(words[wb + (pos >> 6)])) & 0xFFFFFFFFFFFFFFFF
        if pos & 63:
            w >>= pos & 63
        c = w.bit_count()
        if c >= rel:
            return pos + select_in_word(w, rel)
        rel -= c
        pos += 64 - (pos & 63)


def plain_select0(words, rl, rs, l, s, n, m, i):
    return _plain_select0(words, 0, rl, 0, rs, 0, l, s, n, m, i)


def plain_rank1_many(words, rl, rs, l, s, xs, out):
    for idx in range(len(xs)):
        out[idx] = plain_rank1(words, rl, rs, l, s, int(xs[idx]))


def plain_select1_many(words, rl, rs, l, s, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = plain_select1(words, rl, rs, l, s, n, m, int(qs[idx]))


def plain_select0_many(words, rl, rs, l, s, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = plain_select0(words, rl, rs, l, s, n, m, int(qs[idx]))


# --------------------------------------------------------------------- ent

def _ent_block(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, m, n, q):
    """Decode small block q; returns (ones_before_block, block_bits)."""
    spb = l // s
    j = q // spb
    nsb = (n + s - 1) // s
    cur = int(rl[j]) + int(rs[q])
    if q + 1 >= nsb:
        nxt = m
    elif (q + 1) % spb == 0:
        nxt = int(rl[j + 1])
    else:
        nxt = int(rl[j]) + int(rs[q + 1])
    u = nxt - cur
    width = int(lentab[u])
    if u == 0:
        return cur, 0
    if u == s:
        return cur, (1 << s) - 1
    off = read_bits(code, int(lptr[j]) + int(sptr[q]), width)
    tb = int(taboff[u])
    if tb >= 0:
        return cur, int(tabdat[tb + off])
    return cur, enum_decode(binom, s, u, off)


def ent_rank1(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, x):
    q = x // s
    cur, block = _ent_block(
        code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, m, n, q
    )
    return cur + (block & ((1 << (x - q * s + 1)) - 1)).bit_count()


def ent_select1(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, i):
    nlb = (n + l - 1) // l
    lo, hi = 0, nlb
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if int(rl[mid]) < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - int(rl[j])
    spb = l // s
    nsb = (n + s - 1) // s
    q = j * spb
    qend = min((j + 1) * spb, nsb)
    while q + 1 < qend and int(rs[q + 1]) < rel:
        q += 1
    rel -= int(rs[q])
    _, block = _ent_block(
        code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, m, n, q
    )
    return q * s + select_in_word(block, rel)


def ent_select0(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, i):
    nlb = (n + l - 1) // l
    lo, hi = 0, nlb
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if min(mid * l, n) - int(rl[mid]) < i:
            lo = mid
        else:
            hi = mid - 1
    j = lo
    rel = i - (min(j * l, n) - int(rl[j]))
    spb = l // s
    nsb = (n + s - 1) // s
    q = j * spb
    qend = min((j + 1) * spb, nsb)
    lbstart = j * l
    while q + 1 < qend and ((q + 1) * s - lbstart) - int(rs[q + 1]) < rel:
        q += 1
    rel -= (q * s - lbstart) - int(rs[q])
    _, block = _ent_block(
        code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, m, n, q
    )
    s_real = min(s, n - q * s)
    zblock = (~block) & ((1 << s_real) - 1)
    return q * s + select_in_word(zblock, rel)


def ent_rank1_many(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, xs, out):
    for idx in range(len(xs)):
        out[idx] = ent_rank1(
            code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, int(xs[idx])
        )


def ent_select1_many(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = ent_select1(
            code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, int(qs[idx])
        )


def ent_select0_many(code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = ent_select0(
            code, rl, rs, lptr, sptr, lentab, taboff, tabdat, binom, l, s, n, m, int(qs[idx])
        )


# --------------------------------------------------------------------- esp

def fx_estimate(fxu, fxd, big_n, big_m):
    """Ceiled fixed-point over-approximation of the entropy of an (N, M) prefix."""
    if big_m <= 0 or big_m >= big_n:
        return 0
    a = int(fxu[big_n])
    v = big_m * (a - int(fxd[big_m])) + (big_n - big_m) * (a - int(fxd[big_n - big_m]))
    return -((-v) // 65536)


class _EspView:
    """Per-query cursor over the packed per-superblock directories."""

    __slots__ = ("rlw", "rlbase", "rsw", "rsbase", "dslb", "wl", "lb_per", "spb")

    def __init__(self, rlw, rlbase, rsw, rsbase, rslb, k, l, s, sigma):
        self.rlw = rlw
        self.rsw = rsw
        self.lb_per = k // l
        self.spb = l // s
        self.dslb = int(rslb[sigma + 1]) - int(rslb[sigma])
        self.wl = self.dslb.bit_length()
        self.rlbase = int(rlbase[sigma])
        self.rsbase = int(rsbase[sigma])

    def rl(self, t):
        if t == 0:
            return 0
        if t >= self.lb_per:
            return self.dslb
        return read_bits(self.rlw, self.rlbase + (t - 1) * self.wl, self.wl)

    def rs_base_at(self, t):
        off = self.rsbase
        prev = 0
        for tau in range(t):
            cur = self.rl(tau + 1)
            off += (self.spb - 1) * (cur - prev).bit_length()
            prev = cur
        return off

    def rs(self, rsoff, wt, dlb, q):
        if q == 0:
            return 0
        if q >= self.spb:
            return dlb
        return read_bits(self.rsw, rsoff + (q - 1) * wt, wt)


def _esp_decode(code, lentab, taboff, tabdat, binom, s, u, pos):
    if u == 0:
        return 0
    if u == s:
        return (1 << s) - 1
    off = read_bits(code, pos, int(lentab[u]))
    tb = int(taboff[u])
    if tb >= 0:
        return int(tabdat[tb + off])
    return enum_decode(binom, s, u, off)


def esp_rank1(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
              lentab, taboff, tabdat, binom, k, l, s, slack, n, x):
    sigma = x // k
    xk = x - sigma * k
    t = xk // l
    xl = xk - t * l
    jj = xl // s
    xoff = xl - jj * s
    v = _EspView(rlw, rlbase, rsw, rsbase, rslb, k, l, s, sigma)
    lr = v.rl(t)
    rsoff = v.rs_base_at(t)
    dlb = v.rl(t + 1) - lr
    wt = dlb.bit_length()
    sr = v.rs(rsoff, wt, dlb, jj)
    u = v.rs(rsoff, wt, dlb, jj + 1) - sr
    pos = (
        int(slp[sigma])
        + fx_estimate(fxu, fxd, t * l, lr)
        + fx_estimate(fxu, fxd, jj * s, sr)
        + slack * (t * v.spb + jj)
    )
    block = _esp_decode(code, lentab, taboff, tabdat, binom, s, u, pos)
    return int(rslb[sigma]) + lr + sr + (block & ((1 << (xoff + 1)) - 1)).bit_count()


def _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                lentab, taboff, tabdat, binom, k, l, s, slack, n, i, zeros):
    """Shared body of select1/select0: find and decode the target block."""
    nslb = (len(rslb) - 1)
    lo, hi = 0, nslb - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        have = min(mid * k, n) - int(rslb[mid]) if zeros else int(rslb[mid])
        if have < i:
            lo = mid
        else:
            hi = mid - 1
    sigma = lo
    base = min(sigma * k, n) - int(rslb[sigma]) if zeros else int(rslb[sigma])
    rel = i - base
    v = _EspView(rlw, rlbase, rsw, rsbase, rslb, k, l, s, sigma)
    sbase = sigma * k
    t = 0
    while t + 1 < v.lb_per and sbase + (t + 1) * l < n:
        nxt = v.rl(t + 1)
        have = ((t + 1) * l - nxt) if zeros else nxt
        if have >= rel:
            break
        t += 1
    lr = v.rl(t)
    rel -= (t * l - lr) if zeros else lr
    rsoff = v.rs_base_at(t)
    dlb = v.rl(t + 1) - lr
    wt = dlb.bit_length()
    jj = 0
    lbstart = sbase + t * l
    while jj + 1 < v.spb and lbstart + (jj + 1) * s < n:
        nxt = v.rs(rsoff, wt, dlb, jj + 1)
        have = ((jj + 1) * s - nxt) if zeros else nxt
        if have >= rel:
            break
        jj += 1
    sr = v.rs(rsoff, wt, dlb, jj)
    rel -= (jj * s - sr) if zeros else sr
    u = v.rs(rsoff, wt, dlb, jj + 1) - sr
    pos = (
        int(slp[sigma])
        + fx_estimate(fxu, fxd, t * l, lr)
        + fx_estimate(fxu, fxd, jj * s, sr)
        + slack * (t * v.spb + jj)
    )
    block = _esp_decode(code, lentab, taboff, tabdat, binom, s, u, pos)
    sbstart = lbstart + jj * s
    if zeros:
        s_real = min(s, n - sbstart)
        block = (~block) & ((1 << s_real) - 1)
    return sbstart + select_in_word(block, rel)


def esp_select1(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                lentab, taboff, tabdat, binom, k, l, s, slack, n, i):
    return _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                       lentab, taboff, tabdat, binom, k, l, s, slack, n, i, False)


def esp_select0(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                lentab, taboff, tabdat, binom, k, l, s, slack, n, i):
    return _esp_locate(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                       lentab, taboff, tabdat, binom, k, l, s, slack, n, i, True)


def esp_rank1_many(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                   lentab, taboff, tabdat, binom, k, l, s, slack, n, xs, out):
    for idx in range(len(xs)):
        out[idx] = esp_rank1(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                             lentab, taboff, tabdat, binom, k, l, s, slack, n, int(xs[idx]))


def esp_select1_many(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                     lentab, taboff, tabdat, binom, k, l, s, slack, n, qs, out):
    for idx in range(len(qs)):
        out[idx] = esp_select1(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                               lentab, taboff, tabdat, binom, k, l, s, slack, n, int(qs[idx]))


def esp_select0_many(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                     lentab, taboff, tabdat, binom, k, l, s, slack, n, qs, out):
    for idx in range(len(qs)):
        out[idx] = esp_select0(code, slp, rslb, rlw, rlbase, rsw, rsbase, fxu, fxd,
                               lentab, taboff, tabdat, binom, k, l, s, slack, n, int(qs[idx]))


# ----------------------------------------------------------------- recrank
# Chain state is flattened: level arrays live back to back in shared buffers,
# per-level bases in woff/rloff/rsoff.  Level nlev (one past the reductions)
# is the final dense dictionary.

def rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, x):
    for lv in range(nlev):
        t = int(tarr[lv])
        b = x // t
        wb = int(woff[lv])
        r = _plain_rank1(words, wb, rl, int(rloff[lv]), rs, int(rsoff[lv]), l, s, b)
        if (int(words[wb + (b >> 6)]) >> (b & 63)) & 1:
            x = (r - 1) * t + (x - b * t)
        else:
            if r == 0:
                return 0
            x = r * t - 1
    return _plain_rank1(words, int(woff[nlev]), rl, int(rloff[nlev]), rs, int(rsoff[nlev]), l, s, x)


def rr_select1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, m, i):
    e = _plain_select1(words, int(woff[nlev]), rl, int(rloff[nlev]), rs, int(rsoff[nlev]),
                       l, s, int(nbits[nlev]), m, i)
    for lv in range(nlev - 1, -1, -1):
        t = int(tarr[lv])
        j = e // t
        b = _plain_select1(words, int(woff[lv]), rl, int(rloff[lv]), rs, int(rsoff[lv]),
                           l, s, int(nbits[lv]), 0, j + 1)
        e = b * t + (e - j * t)
    return e


def rr_select0(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, n, m, i):
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi) >> 1
        if mid + 1 - rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, mid) < i:
            lo = mid + 1
        else:
            hi = mid
    return lo


def rr_rank1_many(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, xs, out):
    for idx in range(len(xs)):
        out[idx] = rr_rank1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, int(xs[idx]))


def rr_select1_many(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = rr_select1(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, m, int(qs[idx]))


def rr_select0_many(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = rr_select0(words, rl, rs, woff, rloff, rsoff, tarr, nbits, nlev, l, s, n, m, int(qs[idx]))


# ------------------------------------------------------------------- vcode

def _vc_plane_off(tarr, offs, anchors, mode, pbytes, b):
    if mode == 0:
        return int(offs[b])
    off = int(anchors[b >> 5])
    for bb in range(b & ~31, b):
        off += int(tarr[bb]) * pbytes
    return off


def vc_select1(sarr, tarr, planes, offs, anchors, mode, p, m, i):
    idx = i - 1
    b = idx // p
    q = idx - b * p
    pbytes = p >> 3
    res = int(sarr[b]) + q + 1
    tb = int(tarr[b])
    if tb == 0:
        return res
    off = _vc_plane_off(tarr, offs, anchors, mode, pbytes, b)
    nby = q >> 3
    tailmask = (1 << ((q & 7) + 1)) - 1
    for j in range(tb):
        base = off + j * pbytes
        c = 0
        for by in range(nby):
            c += int(planes[base + by]).bit_count()
        c += (int(planes[base + nby]) & tailmask).bit_count()
        res += c << j
    return res


def vc_rank1(sarr, tarr, planes, offs, anchors, mode, p, n, m, x):
    lo, hi = 1, m
    best = 0
    while lo <= hi:
        mid = (lo + hi) >> 1
        if vc_select1(sarr, tarr, planes, offs, anchors, mode, p, m, mid) <= x:
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return best


def vc_select0(sarr, tarr, planes, offs, anchors, mode, p, n, m, i):
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi) >> 1
        r0 = mid + 1 - vc_rank1(sarr, tarr, planes, offs, anchors, mode, p, n, m, mid)
        if r0 < i:
            lo = mid + 1
        else:
            hi = mid
    return lo


def vc_select1_many(sarr, tarr, planes, offs, anchors, mode, p, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = vc_select1(sarr, tarr, planes, offs, anchors, mode, p, m, int(qs[idx]))


def vc_rank1_many(sarr, tarr, planes, offs, anchors, mode, p, n, m, xs, out):
    for idx in range(len(xs)):
        out[idx] = vc_rank1(sarr, tarr, planes, offs, anchors, mode, p, n, m, int(xs[idx]))


def vc_select0_many(sarr, tarr, planes, offs, anchors, mode, p, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = vc_select0(sarr, tarr, planes, offs, anchors, mode, p, n, m, int(qs[idx]))


# ----------------------------------------------------------------- sdarray

def _da_word(words, n, invert, widx):
    w = int(words[widx])
    if invert:
        w = (~w) & 0xFFFFFFFFFFFFFFFF
        tail = n - (widx << 6)
        if tail < 64:
            w &= (1 << tail) - 1
    return w


def da_select(words, n, invert, pl, flags, sl, slbase, ss, ssbase, L, L2, L3, i):
    b = (i - 1) // L
    q = (i - 1) - b * L
    if flags[b]:
        return int(sl[int(slbase[b]) + q])
    sidx = q // L3
    pos = int(pl[b]) + int(ss[int(ssbase[b]) + sidx])
    rem = q - sidx * L3
    if rem == 0:
        return pos
    cur = pos + 1
    widx = cur >> 6
    w = _da_word(words, n, invert, widx) >> (cur & 63)
    while True:
        c = w.bit_count()
        if c >= rem:
            return cur + select_in_word(w, rem)
        rem -= c
        widx += 1
        cur = widx << 6
        w = _da_word(words, n, invert, widx)


def da_select_many(words, n, invert, pl, flags, sl, slbase, ss, ssbase, L, L2, L3, qs, out):
    for idx in range(len(qs)):
        out[idx] = da_select(words, n, invert, pl, flags, sl, slbase, ss, ssbase,
                             L, L2, L3, int(qs[idx]))


def sa_select1(hwords, hlen, pl, flags, sl, slbase, ss, ssbase, L, L2, L3, lo, w, i):
    hpos = da_select(hwords, hlen, 0, pl, flags, sl, slbase, ss, ssbase, L, L2, L3, i)
    return ((hpos - (i - 1)) << w) | read_bits(lo, (i - 1) * w, w)


def sa_rank1(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0, L, L2, L3, lo, w, m, x):
    h = x >> w
    xl = x & ((1 << w) - 1)
    if h == 0:
        y = 0
        kk = 0
    else:
        y = da_select(hwords, hlen, 1, pl0, flags0, sl0, slbase0, ss0, ssbase0, L, L2, L3, h) + 1
        kk = y - h
    while y < hlen and get_bit(hwords, y):
        if read_bits(lo, kk * w, w) > xl:
            break
        kk += 1
        y += 1
    return kk


def sa_select0(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0, L, L2, L3, lo, w, n, m, i):
    lo_x, hi_x = 0, n - 1
    while lo_x < hi_x:
        mid = (lo_x + hi_x) >> 1
        r0 = mid + 1 - sa_rank1(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                                L, L2, L3, lo, w, m, mid)
        if r0 < i:
            lo_x = mid + 1
        else:
            hi_x = mid
    return lo_x


def sa_select1_many(hwords, hlen, pl, flags, sl, slbase, ss, ssbase, L, L2, L3, lo, w, qs, out):
    for idx in range(len(qs)):
        out[idx] = sa_select1(hwords, hlen, pl, flags, sl, slbase, ss, ssbase,
                              L, L2, L3, lo, w, int(qs[idx]))


def sa_rank1_many(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0, L, L2, L3,
                  lo, w, m, xs, out):
    for idx in range(len(xs)):
        out[idx] = sa_rank1(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                            L, L2, L3, lo, w, m, int(xs[idx]))


def sa_select0_many(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0, L, L2, L3,
                    lo, w, n, m, qs, out):
    for idx in range(len(qs)):
        out[idx] = sa_select0(hwords, hlen, pl0, flags0, sl0, slbase0, ss0, ssbase0,
                              L, L2, L3, lo, w, n, m, int(qs[idx]))
