import json
import subprocess
import sys

import pytest

from conftest import SEQ_EXAMPLE
from vactab.cli import growth_roundtrip, load_listing, main, reproduce_listing, run
from vactab.growth import Filling
from vactab.identities import ID_ALIASES


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_ok(capsys):
    code, out, _ = call(capsys, "verify", "--id", "bounded", "--n", "3", "--k", "5")
    assert (code, out) == (0, "41 = 41 ok\n")


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--id", "bell", "--n", "4", "--k", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"id": "bell", "n": 4, "k": 2, "lhs": 15, "rhs": 15, "middle": 15, "ok": True}


def test_verify_mismatch_exit_code(capsys):
    code, out, _ = call(capsys, "verify", "--id", "shaped", "--n", "3", "--k", "1", "--mu", "21")
    assert code == 1 and out.strip() == "3 = 6 mismatch"


def test_precondition_gate(capsys):
    code, out, err = call(capsys, "verify", "--id", "bell", "--n", "2", "--k", "2")
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "9.9", "--n", "1", "--k", "1"],
    ["verify", "--id", "sequences", "--n", "x", "--k", "1"],
    ["verify", "--id", "sequences", "--bogus"],
    ["map", "--id", "sequences", "--n", "3", "--k", "2", "--seq", "1,a"],
    ["map", "--id", "sequences", "--n", "3", "--k", "2"],
    ["enum", "--from", "2,3", "--to", "3", "--k", "1"],
])
def test_invalid_inputs(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
        raise SystemExit(2)
    _, err = capsys.readouterr()
    assert exc.value.code == 2
    assert len(err.strip().splitlines()) == 1


def test_map_and_unmap(capsys):
    code, out, _ = call(capsys, "map", "--id", "sequences", "--n", "6", "--k", "3", "--seq", "3,4,2")
    assert code == 0 and out.splitlines() == ["1 2 3/4 5/6", "321>32<42>41<51>5<6"]
    code, out, _ = call(capsys, "unmap", "--id", "sequences", "--n", "6", "--k", "3",
                        "--syt", "1 2 3/4 5/6", "--tableau", "321>32<42>41<51>5<6")
    assert out.strip() == "3,4,2"


def test_map_partitions(capsys):
    _, out, _ = call(capsys, "map", "--id", "bounded", "--n", "3", "--k", "10", "--partition", "1 2 3 4 5 7 | 6 8 9 10")
    assert out.strip() == "3>2<3>2<3>2<3>2<3>2<21>2<21>2<21>2<3>2<3>2<3"
    _, out, _ = call(capsys, "unmap", "--id", "bounded", "--n", "3", "--k", "10", "--tableau", out.strip())
    assert out.strip() == "1 2 3 4 5 7 | 6 8 9 10"
    _, out, _ = call(capsys, "map", "--id", "column", "--n", "3", "--k", "4", "--partition", "1 2 | 3 | 4")
    _, back, _ = call(capsys, "unmap", "--id", "column", "--n", "3", "--k", "4", "--tableau", out.strip())
    assert back.strip() == "1 2 | 3 | 4"
    _, out, _ = call(capsys, "map", "--id", "hook", "--n", "3", "--k", "3", "--partition", "1 2 | 3",
                     "--case", "2", "--a", "2", "--b", "1")
    _, back, _ = call(capsys, "unmap", "--id", "hook", "--n", "3", "--k", "3", "--tableau", out.strip())
    assert back.strip() == "case 2: 1 2 | 3 (a=2, b=1)"


def test_map_invalid_partition(capsys):
    code, _, err = call(capsys, "map", "--id", "bounded", "--n", "1", "--k", "2", "--partition", "1 | 2")
    assert code == 2 and "blocks" in err


def test_enum(capsys):
    code, out, _ = call(capsys, "enum", "--from", "3", "--to", "3", "--k", "5")
    assert code == 0 and out.splitlines()[-1] == "count: 41"
    _, out, _ = call(capsys, "enum", "--what", "setpart", "--k", "4", "--format", "json")
    assert json.loads(out)["count"] == 15
    _, out, _ = call(capsys, "enum", "--what", "syt", "--from", "2,1")
    assert out.splitlines() == ["1 2/3", "1 3/2", "count: 2"]


@pytest.mark.parametrize("which,count", [("A", 41), ("B", 40), ("C", 18)])
def test_listing(capsys, which, count):
    rep = reproduce_listing(which)
    assert rep.status == "ok" and rep.lines[-1] == f"count: {count}"
    assert len(load_listing(which)) == count
    code, out, _ = call(capsys, "listing", which)
    assert code == 0 and len(out.splitlines()) == count + 1


def test_listing_b_line_shape():
    lines = reproduce_listing("B").lines[:-1]
    assert all(line.startswith("3>") and line.endswith("<111") for line in lines)


def test_growth_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(Filling.of([9] * 6 + [8, 7, 6], SEQ_EXAMPLE).to_json())
    code, out, _ = call(capsys, "growth", str(path))
    assert code == 0 and out.splitlines()[-1] == "ok"
    data = json.loads(path.read_text())
    data["boundary"] = "-<1<2<21<31<32<321>32<42>41<51>5<6>5>4>3>2>1>-"
    path.write_text(json.dumps(data))
    code, out, _ = call(capsys, "growth", str(path))
    assert code == 1


def test_growth_empty_and_malformed(tmp_path, capsys):
    path = tmp_path / "e.json"
    path.write_text('{"rows": [3, 2], "crosses": []}')
    assert call(capsys, "growth", str(path), "--render")[0] == 0
    path.write_text("{not json")
    code, _, err = call(capsys, "growth", str(path))
    assert code == 2 and len(err.strip().splitlines()) == 1


def test_growth_roundtrip_report():
    assert growth_roundtrip(Filling.of([2, 2], [(1, 2), (2, 1)])).status == "ok"


def test_deterministic_output():
    argv = ["listing", "C"]
    assert run(argv).lines == run(argv).lines


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "vactab", "verify", "--id", "hook", "--n", "3", "--k", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "18 = 18 ok"


def test_short_ids_are_aliases():
    for short, name in ID_ALIASES.items():
        n, k = (4, 2) if name != "hook" else (3, 2)
        assert run(["verify", "--id", short, "--n", str(n), "--k", str(k)]).lines == \
            run(["verify", "--id", name, "--n", str(n), "--k", str(k)]).lines


def test_listing_alias():
    assert run(["appendix", "B"]).lines == run(["listing", "B"]).lines
