import json
from pathlib import Path

from planepaths import PointSet, convex_hull, is_wheel
from planepaths.cli import main
from planepaths.fileio import format_instance, parse_instance

DATA = Path(__file__).parent / "data"


def run(*argv):
    return main(list(argv))


def test_gen_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    assert run("gen", "--kind", "random", "--n", "10", "--seed", "1", "--out", str(a)) == 0
    assert run("gen", "--kind", "random", "--n", "10", "--seed", "1", "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    assert run("gen", "--kind", "random", "--n", "10", "--seed", "2", "--out", str(b)) == 0
    assert a.read_bytes() != b.read_bytes()


def test_gen_kinds(tmp_path):
    w = tmp_path / "w.txt"
    assert run("gen", "--kind", "wheel", "--n", "8", "--seed", "3", "--out", str(w)) == 0
    ps = PointSet(parse_instance(w.read_text()))
    assert is_wheel(ps) is not None
    c = tmp_path / "c.txt"
    assert run("gen", "--kind", "convex", "--n", "9", "--seed", "3", "--out", str(c)) == 0
    psc = PointSet(parse_instance(c.read_text()))
    assert len(convex_hull(psc)) == 9


def test_gen_rejects_bad_n(tmp_path):
    assert run("gen", "--kind", "wheel", "--n", "7", "--seed", "1",
               "--out", str(tmp_path / "x.txt")) == 2


def test_instance_round_trip(tmp_path):
    pts = [(-3, 4), (10, -2), (0, 0), (7, 7)]
    text = format_instance(pts)
    assert parse_instance(text) == pts
    commented = "# header comment\n" + text
    assert parse_instance(commented) == pts


def test_pack_verify_cycle(tmp_path, capsys):
    inst = tmp_path / "i.txt"
    res = tmp_path / "r.json"
    assert run("gen", "--kind", "random", "--n", "14", "--seed", "5", "--out", str(inst)) == 0
    assert run("pack", "--in", str(inst), "--out", str(res)) == 0
    doc = json.loads(res.read_text())
    assert doc["verified"] is True
    assert len(doc["paths"]) == 3
    assert doc["violations"] == []
    assert run("verify", "--in", str(inst), "--paths", str(res)) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    # byte determinism
    res2 = tmp_path / "r2.json"
    assert run("pack", "--in", str(inst), "--out", str(res2)) == 0
    assert res.read_bytes() == res2.read_bytes()


def test_pack_error_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 0\n1 1\n2 2\n")
    assert run("pack", "--in", str(bad)) == 2
    assert "collinear" in capsys.readouterr().err
    few = tmp_path / "few.txt"
    few.write_text("6\n0 0\n5 1\n3 7\n-2 5\n9 4\n4 -3\n")
    assert run("pack", "--in", str(few)) == 2
    assert run("pack", "--in", str(tmp_path / "missing.txt")) == 2


def test_two_cycle(tmp_path, capsys):
    inst = tmp_path / "p.txt"
    inst.write_text(format_instance([(0, 0), (10, 0), (13, 9), (5, 14), (-3, 8)]))
    res = tmp_path / "two.json"
    assert run("two", "--in", str(inst), "--s", "0", "--t", "2", "--out", str(res)) == 0
    doc = json.loads(res.read_text())
    assert doc["verified"] is True
    assert doc["paths"][0][0] == 0 and doc["paths"][1][0] == 2
    for p in doc["paths"]:
        edges = {tuple(sorted((p[i], p[i + 1]))) for i in range(len(p) - 1)}
        assert (0, 2) not in edges
    interior = tmp_path / "q.txt"
    interior.write_text(
        format_instance([(0, 0), (10, 0), (12, 10), (4, 15), (-4, 9), (5, 6)])
    )
    assert run("two", "--in", str(interior), "--s", "5", "--t", "0") == 2
    assert "hull" in capsys.readouterr().err


def test_verify_catches_tampering(tmp_path, capsys):
    inst = tmp_path / "i.txt"
    res = tmp_path / "r.json"
    run("gen", "--kind", "random", "--n", "12", "--seed", "8", "--out", str(inst))
    run("pack", "--in", str(inst), "--out", str(res))
    doc = json.loads(res.read_text())
    tampered = dict(doc)
    swapped = [list(p) for p in doc["paths"]]
    swapped[0][2], swapped[0][6] = swapped[0][6], swapped[0][2]
    tampered["paths"] = swapped
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(tampered))
    assert run("verify", "--in", str(inst), "--paths", str(bad)) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "cross" in out

    dup = dict(doc)
    dup["paths"] = [doc["paths"][0], doc["paths"][0], doc["paths"][2]]
    dupf = tmp_path / "dup.json"
    dupf.write_text(json.dumps(dup))
    assert run("verify", "--in", str(inst), "--paths", str(dupf)) == 1
    assert "appears in paths" in capsys.readouterr().out


def test_render_structure(tmp_path):
    inst = tmp_path / "i.txt"
    res = tmp_path / "r.json"
    svg = tmp_path / "f.svg"
    run("gen", "--kind", "random", "--n", "11", "--seed", "9", "--out", str(inst))
    run("pack", "--in", str(inst), "--out", str(res))
    assert run("render", "--in", str(inst), "--paths", str(res), "--out", str(svg), "--hull") == 0
    text = svg.read_text()
    for cls in ("path0", "path1", "path2"):
        assert f'class="{cls}"' in text
    assert 'class="hull"' in text
    bare = tmp_path / "bare.svg"
    assert run("render", "--in", str(inst), "--out", str(bare)) == 0
    assert 'class="path0"' not in bare.read_text().replace(".path0{", "")
    assert "<circle" in bare.read_text()


def test_render_golden_wheel(tmp_path):
    # frozen figure for the 8-wheel and its three packed paths
    inst = tmp_path / "w8.txt"
    res = tmp_path / "w8.json"
    svg = tmp_path / "w8.svg"
    assert run("gen", "--kind", "wheel", "--n", "8", "--seed", "1", "--out", str(inst)) == 0
    assert run("pack", "--in", str(inst), "--out", str(res)) == 0
    assert run("render", "--in", str(inst), "--paths", str(res), "--out", str(svg)) == 0
    golden = DATA / "golden_w8.svg"
    assert svg.read_bytes() == golden.read_bytes()


def test_oracle_cli(tmp_path, capsys):
    inst = tmp_path / "w6.txt"
    run("gen", "--kind", "wheel", "--n", "6", "--seed", "1", "--out", str(inst))
    assert run("oracle", "--in", str(inst), "--k", "3") == 0
    assert "ABSENT" in capsys.readouterr().out
    res = tmp_path / "o.json"
    assert run("oracle", "--in", str(inst), "--k", "2", "--out", str(res)) == 0
    doc = json.loads(res.read_text())
    assert doc["verified"] is True and len(doc["paths"]) == 2
    big = tmp_path / "big.txt"
    run("gen", "--kind", "random", "--n", "9", "--seed", "4", "--out", str(big))
    assert run("oracle", "--in", str(big), "--k", "3", "--budget", "10") == 4


def test_internal_error_dumps_instance(tmp_path, monkeypatch, capsys):
    import planepaths.cli as cli_mod

    inst = tmp_path / "i.txt"
    run("gen", "--kind", "random", "--n", "12", "--seed", "3", "--out", str(inst))

    def boom(ps):
        from planepaths.errors import InternalError

        raise InternalError("synthetic failure", ps.pts)

    monkeypatch.setattr(cli_mod, "three_paths", boom)
    monkeypatch.chdir(tmp_path)
    assert run("pack", "--in", str(inst)) == 3
    err = capsys.readouterr().err
    assert "internal error" in err
    dumps = list(tmp_path.glob("planepaths-diagnostic-*.txt"))
    assert len(dumps) == 1
    assert parse_instance(dumps[0].read_text()) == parse_instance(inst.read_text())
