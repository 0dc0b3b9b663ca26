import csv
import io

import pytest

from rsdict import bench, load
from rsdict.cli import main


def test_generate_degenerate():
    assert bench.generate(500, 0.0, 1).count() == 0
    assert bench.generate(500, 1.0, 1).count() == 500
    with pytest.raises(ValueError):
        bench.generate(500, 1.5, 1)


def test_generate_deterministic_and_concentrated():
    n = 1 << 20
    a = bench.generate(n, 0.01, 42)
    b = bench.generate(n, 0.01, 42)
    assert a == b
    m = a.count()
    sigma = (n * 0.01 * 0.99) ** 0.5
    assert abs(m - 0.01 * n) <= 4 * sigma
    assert bench.generate(n, 0.01, 43).count() != m or True  # different stream


def test_generate_exact_m():
    v = bench.generate(10000, 0.0137, 7, exact_m=True)
    assert v.count() == round(0.0137 * 10000)


def test_verify_passes_small_grid():
    report = bench.verify(["plain", "ent", "sarray"], 2048,
                          [0.001, 0.05, 0.5], seed=3, ops=500)
    assert report.ok
    ops = {c.op for c in report.cases}
    assert {"rank", "rank0", "select0"} <= ops


def test_verify_catches_broken_structure(monkeypatch):
    import rsdict.plainrs as plainrs

    orig = plainrs.PlainRankSelect.rank1_many

    def broken(self, xs):
        out = orig(self, xs)
        out[0] += 1
        return out

    monkeypatch.setattr(plainrs.PlainRankSelect, "rank1_many", broken)
    report = bench.verify(["plain"], 1024, [0.2], seed=1, ops=100,
                          include_adversarial=False)
    assert not report.ok
    fail = report.first_failure()
    assert fail.op in ("rank", "rank0") and "expected" in fail.detail


def test_measure_rows_and_csv():
    rows = bench.measure(["plain", "vcode"], 1 << 14, [0.05], seed=2,
                         ops=300, reps=2)
    text = bench.rows_to_csv(rows)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert [c for c in parsed[0]] == bench.CSV_HEADER
    assert {r["op"] for r in parsed} == {"rank", "select", "select0"}
    for r in parsed:
        assert float(r["ns_per_op"]) > 0
        assert int(r["size_bits"]) > 0
    # size columns are deterministic across runs
    rows2 = bench.measure(["plain", "vcode"], 1 << 14, [0.05], seed=2,
                          ops=300, reps=2)
    assert [r["size_bits"] for r in rows] == [r["size_bits"] for r in rows2]


def test_cli_verify_ok(capsys):
    rc = main(["verify", "--structures", "plain,recrank", "--n", "2048",
               "--density", "0.01,0.3", "--seed", "5", "--ops", "200"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PASS" in out


def test_cli_measure_csv(tmp_path, capsys):
    path = tmp_path / "out.csv"
    rc = main(["measure", "--structures", "sarray", "--n", "16384",
               "--density", "0.02", "--seed", "1", "--ops", "200",
               "--reps", "2", "--csv", str(path)])
    assert rc == 0
    text = path.read_text()
    assert text.splitlines()[0] == ",".join(bench.CSV_HEADER)


def test_cli_param_overrides(capsys):
    rc = main(["verify", "--structures", "vcode", "--n", "4096",
               "--density", "0.05", "--seed", "2", "--ops", "100",
               "--param", "vcode.p=16", "--param", "offset_mode=sampled"])
    assert rc == 0
    with pytest.raises(SystemExit):
        main(["verify", "--structures", "vcode", "--n", "64",
              "--density", "0.1", "--seed", "1", "--param", "bogus=3"])


def test_cli_dump_roundtrip(tmp_path, capsys):
    rc = main(["dump", "--structures", "esp", "--n", "8192",
               "--density", "0.04", "--seed", "9", "--out", str(tmp_path)])
    assert rc == 0
    files = list(tmp_path.glob("*.rsd"))
    assert len(files) == 1
    d = load(files[0].read_bytes())
    assert d.KIND == "esp" and d.n == 8192


def test_verify_thread_env(monkeypatch):
    monkeypatch.setenv("RSDICT_THREADS", "2")
    report = bench.verify(["plain", "darray"], 1024, [0.1], seed=2, ops=100)
    assert report.ok
