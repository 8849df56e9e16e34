from __future__ import annotations

import pytest

from multimagic import parse_square, product
from multimagic.cli import FAILED, INFEASIBLE, OK, USAGE, main
from multimagic.formats import write_square

from .conftest import as_lists, oracle_diagonal, oracle_multimagic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def squares_in(text):
    """Split concatenated canonical squares."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    out = []
    while lines:
        n = int(lines[0].split()[0])
        out.append(parse_square("\n".join(lines[: n + 1]))[0])
        lines = lines[n + 1 :]
    return out


@pytest.fixture
def files(tmp_path, pf8, b0):
    write_square(tmp_path / "p8.txt", pf8, 2)
    write_square(tmp_path / "b0.txt", b0, 2)
    (tmp_path / "shifted.txt").write_text("2 1\n5 6\n7 8\n")
    (tmp_path / "junk.txt").write_text("2 1\n0 x\n1 0\n")
    return tmp_path


def test_verify_exit_codes(capsys, files):
    code, out, _ = run(capsys, "verify", str(files / "p8.txt"))
    assert code == OK and out.startswith("verified")
    code, out, _ = run(capsys, "verify", str(files / "b0.txt"))
    assert code == FAILED and "e=2" in out
    code, _, _ = run(capsys, "verify", str(files / "b0.txt"), "--degree", "1")
    assert code == OK
    code, _, err = run(capsys, "verify", str(files / "junk.txt"))
    assert code == USAGE and "line 2" in err
    code, _, _ = run(capsys, "verify", str(files / "missing.txt"))
    assert code == USAGE


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == USAGE
    assert run(capsys)[0] == USAGE
    assert run(capsys, "gen", "dls", "seven")[0] == USAGE
    assert run(capsys, "catalog", "show")[0] == USAGE
    assert run(capsys, "catalog", "show", "no-such-id")[0] == USAGE


def test_help_exits_cleanly(capsys):
    assert run(capsys, "--help")[0] == OK


def test_generators(capsys):
    code, out, _ = run(capsys, "gen", "dls", "12")
    assert code == OK
    (sq,) = squares_in(out)
    assert out.startswith("12 0\n") and oracle_diagonal(as_lists(sq))

    code, out, _ = run(capsys, "gen", "odls", "10")
    a, b = squares_in(out)
    assert code == OK and len({(x, y) for ra, rb in zip(a.cells, b.cells) for x, y in zip(ra, rb)}) == 100

    code, out, _ = run(capsys, "gen", "kotzig", "2", "4")
    assert code == OK
    assert out.splitlines() == ["# Kotzig array: 2 rows, 4 columns, column sum 3", "0 1 2 3", "3 2 1 0"]


def test_infeasible_generators(capsys):
    assert run(capsys, "gen", "dls", "3")[0] == INFEASIBLE
    assert run(capsys, "gen", "odls", "6")[0] == INFEASIBLE
    assert run(capsys, "gen", "kotzig", "3", "4")[0] == INFEASIBLE
    assert run(capsys, "gen", "scms", "3", "8", "--degree", "2", "--seed", "pfeffermann-8")[0] == INFEASIBLE


def test_scms_generation(capsys):
    code, out, _ = run(capsys, "gen", "scms", "3", "5")
    members = squares_in(out)
    assert code == OK and len(members) == 3
    assert all(oracle_multimagic(as_lists(m), 1) for m in members)

    code, out, _ = run(capsys, "gen", "scms", "4", "8", "--degree", "2", "--seed", "pfeffermann-8")
    members = squares_in(out)
    assert code == OK and len(members) == 4
    assert all(oracle_multimagic(as_lists(m), 2) for m in members)
    assert run(capsys, "gen", "scms", "2", "8", "--degree", "2")[0] == USAGE


def test_compose_reproduces_published_square(capsys, tmp_path, b0, b1, big_c):
    fam = tmp_path / "fam"
    fam.mkdir()
    for k in range(8):
        write_square(fam / f"m{k}.txt", (b0, b1)[k % 2], 1)
    write_square(tmp_path / "d.txt", _published_dls(), 0)
    code, out, _ = run(capsys, "compose", "--outer", "pfeffermann-8", "--family", str(fam), "--dls", str(tmp_path / "d.txt"))
    assert code == OK
    (c,) = squares_in(out)
    assert c.cells == big_c.cells


def _published_dls():
    from multimagic.catalog import embedded_catalog

    return embedded_catalog().get("ex2-d").square


def test_compose_auto_layout(capsys):
    code, out, _ = run(capsys, "compose", "--outer", "pfeffermann-8", "--family", ",".join(["ex1-b0", "ex1-b1"] * 4))
    assert code == OK
    (c,) = squares_in(out)
    assert oracle_multimagic(as_lists(c), 2)


def test_product_command(capsys, files, pf8):
    code, out, _ = run(capsys, "product", str(files / "p8.txt"), "pfeffermann-8")
    assert code == OK
    (sq,) = squares_in(out)
    assert sq.cells == product(pf8, pf8, 2).cells


def test_plan_command(capsys):
    code, out, _ = run(capsys, "plan", "40", "--degree", "2")
    assert code == OK
    (sq,) = squares_in(out)
    assert oracle_multimagic(as_lists(sq), 2)
    code, out, _ = run(capsys, "plan", "40", "--degree", "2", "--explain")
    assert code == OK and "KA(8,5)" in out
    code, out, _ = run(capsys, "plan", "96", "--degree", "3")
    assert code == INFEASIBLE and "MS(12,3)" in out
    assert run(capsys, "plan", "8", "--degree", "5")[0] == USAGE


def test_catalog_commands(capsys, files, pf8):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == OK and "pfeffermann-8" in out and "kind=kotzig" in out
    code, out, _ = run(capsys, "catalog", "show", "ex1-b0")
    assert code == OK and out.startswith("4 1\n2 12 5 11\n")
    code, out, _ = run(capsys, "catalog", "show", "ex4-k")
    assert code == OK and out.startswith("# Kotzig array: 3 rows, 5 columns")

    assert run(capsys, "catalog", "ingest", str(files / "b0.txt"), "--degree", "2")[0] == FAILED
    code, out, _ = run(capsys, "catalog", "ingest", str(files / "p8.txt"), "--degree", "2")
    assert code == OK and "p8" in out
    code, out, _ = run(capsys, "catalog", "show", "p8")
    assert squares_in(out)[0] == pf8
    assert run(capsys, "catalog", "ingest", str(files / "p8.txt"))[0] == USAGE


def test_normalize_command(capsys, files):
    code, out, _ = run(capsys, "normalize", str(files / "shifted.txt"))
    assert code == OK and out == "2 1\n0 1\n2 3\n"


def test_module_entry_point(tmp_path):
    import os
    import subprocess
    import sys

    env = dict(os.environ, MULTIMAGIC_CATALOG=str(tmp_path))
    done = subprocess.run(
        [sys.executable, "-m", "multimagic", "plan", "9", "--degree", "2"], capture_output=True, text=True, env=env
    )
    assert done.returncode == INFEASIBLE
    done = subprocess.run([sys.executable, "-m", "multimagic", "catalog", "list"], capture_output=True, env=env)
    assert done.returncode == OK
