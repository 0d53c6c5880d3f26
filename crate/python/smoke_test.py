"""Smoke test for the pyhomjordan extension.

Build and run from the repository root:

    cargo build --release -p homjordan-py --features extension-module
    cp target/release/libpyhomjordan.so python/pyhomjordan.so
    python3 python/smoke_test.py
"""

import pathlib
import sys
import tempfile

import pyhomjordan
from pyhomjordan import Algebra, HomJordanError

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def load(name):
    return Algebra.load(FIXTURES / f"{name}.json")


def check_suites():
    example = load("hom_jordan3_2_3_1_2")
    assert example.field == "Q" and example.dim == 3
    assert example.products == ["circ"]
    assert example.check("HOM_JORDAN")["passed"]

    broken = load("hom_jordan3_broken").check("HOM_JORDAN")
    assert not broken["passed"]
    first = next(i for i in broken["identities"] if not i["passed"])
    assert first["identity"] == "commutativity"
    assert first["witness"]["tuple"] == [1, 0]


def round_trip():
    text = (FIXTURES / "dual_numbers.json").read_text()
    algebra = Algebra.parse(text)
    assert algebra.to_json() == text
    with tempfile.TemporaryDirectory() as tmp:
        path = pathlib.Path(tmp) / "copy.json"
        algebra.save(path)
        assert Algebra.load(path) == algebra


def operators_and_constructions():
    example = load("hom_jordan3_2_3_1_2")
    strict = example.verify_rota_baxter("R")
    assert strict["quadratic_identity"]["passed"]
    assert not strict["overall"]
    assert example.verify_rota_baxter("R", policy="lax")["overall"]

    pre = example.derive("rb-prejordan", policy="lax")
    assert pre.products == ["dot"]
    assert pre.check("HOM_PRE_JORDAN")["passed"]
    jordan = pre.derive("anticommutator")
    assert jordan.check("HOM_JORDAN")["passed"]

    try:
        example.derive("rb-prejordan")
    except HomJordanError as e:
        assert "strict" in str(e)
    else:
        raise AssertionError("strict policy should reject R")


def search():
    found = load("dual_numbers_f5").search_rota_baxter(policy="lax")
    assert [["0", "0"], ["1", "0"]] in found
    assert len(load("hom_jordan3_f5").search_rota_baxter(pattern="000/000/**0")) == 25


def main():
    check_suites()
    round_trip()
    operators_and_constructions()
    search()
    print(f"pyhomjordan {pyhomjordan.__version__}: smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
