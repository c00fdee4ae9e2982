"""Smoke test for the moduli_euler_py extension.

Build it first:
    cargo build --release -p moduli-euler-py --features extension-module
    cp target/release/libmoduli_euler_py.so crates/py/python/moduli_euler_py.so
"""

import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import moduli_euler_py as me


def main():
    # chi(M_{0,n}) = (-1)^(n-3) (n-3)!
    for n in range(3, 10):
        assert me.chi_open(0, n) == (-1) ** (n - 3) * factorial(n - 3)

    for n in range(0, 9):
        closed = me.chi_open(2, n)
        assert isinstance(closed, Fraction)
        other = me.chi_open(2, n, "strata" if n <= 6 else "recursive")
        assert closed == other, (n, closed, other)

    table = me.chi_compact(2, 7)
    assert [v for _, v in table] == [6, 13, 42, 181, 1004, 6853, 55942, 533019]

    d = me.Series.named("D", 6)
    assert d.coeffs()[4] == Fraction(7, 24)
    one = me.Series([1, 0, 0, 0, 0, 0])
    assert d.derivative() * (one - d.log1p()) == me.Series([1, 0, 0, 0, 0])
    f = me.Series([0, Fraction(1, 2), -3, Fraction(2, 7)])
    try:
        f.exp().log1p()
    except me.ModuliError:
        pass
    else:
        raise AssertionError("log1p of a series with nonzero constant term")
    assert (f.exp() - me.Series([1, 0, 0, 0])).log1p() == f

    assert me.quotient("m0-mod-sj", [7], j=2) == 12
    action = me.GroupAction.named(7, "d4")
    assert action.order == 8 and action.is_group()
    poly, chi = action.burnside()
    assert sum(poly) == chi == me.quotient("m0-mod-d4", [7])

    gens = [me.Permutation(6, "(3 4)"), me.Permutation(6, "(5 6)")]
    klein = me.GroupAction(6, gens)
    assert klein.burnside()[1] == me.quotient("m0-mod-klein", [6])

    p = me.Permutation(5, "(1 2 3)(4 5)")
    assert p.compose(p.inverse()) == me.Permutation(5, "()")
    assert p.cycle_type() == [3, 2]

    assert me.trees(5) == (236, 34)

    try:
        me.quotient("prod2-mod-klein", [4, 8])
    except me.ModuliError as e:
        assert "outside" in str(e)
    else:
        raise AssertionError("expected ModuliError")
    assert issubclass(me.ModuliError, ValueError)

    checks = me.verify_suite("strata")
    assert checks and all(passed for _, passed, _ in checks), checks

    print("smoke test passed")


if __name__ == "__main__":
    main()
