import csv
import io
import json
import subprocess
import sys

import pytest

from detfactor.cli import EXIT_BAD_INPUT, EXIT_OK, EXIT_RESOURCE, bench_semiprimes, main, parse_int


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_factor_text(capsys):
    code, out, _ = run(["factor", "8051", "1", "0x30"], capsys)
    assert code == EXIT_OK
    assert out.splitlines() == ["8051 = 83 * 97", "1 = 1", "48 = 2^4 * 3"]


def test_factor_json_schema(capsys):
    code, out, _ = run(["factor", "--json", "48", "1000036000099"], capsys)
    assert code == EXIT_OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["n"] == "48"
    assert recs[0]["factors"] == [{"p": "2", "e": 4}, {"p": "3", "e": 1}]
    assert recs[0]["path"] == "trial"
    assert recs[1]["path"] == "onefifth"
    for rec in recs:
        assert set(rec) == {"n", "factors", "elapsed_ms", "path"}
        assert isinstance(rec["elapsed_ms"], float)
        prod = 1
        for fac in rec["factors"]:
            prod *= int(fac["p"]) ** fac["e"]
        assert prod == int(rec["n"])


def test_factor_stdin(capsys, monkeypatch):
    code, out, _ = run(["factor", "--verify"], capsys, stdin="8051\n\n97\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert out.splitlines() == ["8051 = 83 * 97", "97 = 97"]


@pytest.mark.parametrize("bad", ["abc", "0", "-5", "12.5", "0xZZ"])
def test_factor_malformed(capsys, bad):
    code, out, err = run(["factor", bad], capsys)
    assert code == EXIT_BAD_INPUT
    assert out == "" and "error" in err


def test_bad_flag(capsys):
    code, _, _ = run(["factor", "--nope", "5"], capsys)
    assert code == EXIT_BAD_INPUT
    code, _, _ = run(["bench", "--bits", "x", "--count", "1"], capsys)
    assert code == EXIT_BAD_INPUT


def test_resource_cap(capsys):
    code, _, err = run(["factor", "--max-giant-steps", "5", "1000036000099"], capsys)
    assert code == EXIT_RESOURCE
    assert "giant steps" in err


def test_verbose_trace_deterministic(capsys):
    traces = []
    for _ in range(2):
        code, out, err = run(["factor", "--verbose", "1000036000099"], capsys)
        assert code == EXIT_OK
        traces.append((out, err))
    assert traces[0] == traces[1]
    assert "# giant steps s = " in traces[0][1]


def test_expert_overrides(capsys):
    code, out, err = run(["factor", "--r", "20", "--m", "5000", "--verbose", "1000036000099"], capsys)
    assert code == EXIT_OK
    assert out.strip() == "1000036000099 = 1000003 * 1000033"
    assert "# baby steps m = 5000" in err


def test_jobs_preserve_order(capsys):
    nums = ["1000036000099", "8051", "48", "1000000007"]
    _, serial, _ = run(["factor"] + nums, capsys)
    _, parallel, _ = run(["factor", "--jobs", "2"] + nums, capsys)
    assert serial == parallel


def _bench(argv, capsys):
    code, out, err = run(["bench"] + argv, capsys)
    return code, list(csv.DictReader(io.StringIO(out))), out


def test_bench_40_bits(capsys):
    code, rows, _ = _bench(["--bits", "40", "--count", "5", "--seed", "1"], capsys)
    assert code == EXIT_OK
    inst = [r for r in rows if r["kind"] == "instance"]
    assert len(inst) == 5
    for r in inst:
        assert r["verified"] == "1"
        assert int(r["p"]) * int(r["q"]) == int(r["n"])
        assert int(r["n"]).bit_length() in (39, 40)
    agg = [r for r in rows if r["kind"] == "aggregate"]
    assert len(agg) == 1 and agg[0]["verified"] == "5"


def test_bench_small_bits_take_trial_path(capsys):
    code, rows, _ = _bench(["--bits", "20", "--count", "1", "--seed", "1"], capsys)
    assert code == EXIT_OK
    assert rows[0]["path"] in ("trial", "strassen")
    assert int(rows[0]["n"]) < 10**9


def test_bench_deterministic(capsys):
    def strip(rows):
        return [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in rows]

    _, a, _ = _bench(["--bits", "40", "--count", "3", "--seed", "9"], capsys)
    _, b, _ = _bench(["--bits", "40", "--count", "3", "--seed", "9"], capsys)
    assert strip(a) == strip(b)
    assert bench_semiprimes(40, 3, 9) == bench_semiprimes(40, 3, 9)
    assert bench_semiprimes(40, 3, 9) != bench_semiprimes(40, 3, 10)


def test_bench_plot_and_report(capsys, tmp_path):
    fig = tmp_path / "bench.png"
    code, _, out = _bench(["--bits", "20", "30", "40", "--count", "2", "--plot", str(fig)], capsys)
    assert code == EXIT_OK
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    data = tmp_path / "bench.csv"
    data.write_text(out)
    fig2 = tmp_path / "report.png"
    code, _, _ = run(["report", str(data), "--out", str(fig2)], capsys)
    assert code == EXIT_OK and fig2.stat().st_size > 0


def test_parse_int():
    assert parse_int(" 0x1F ") == 31
    assert parse_int("1_000") == 1000


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "detfactor", "factor", "8051"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "8051 = 83 * 97"
