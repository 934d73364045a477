"""Named instances shared by tests, the CLI and the suite."""

from __future__ import annotations

from functools import cache

from .order import FinLattice, FinPoset, lattice_of_sets, validate_lattice


def chain(n: int, names=None) -> FinLattice:
    names = names or [str(i) for i in range(n)]
    return validate_lattice(FinPoset.from_covers(n, [(i, i + 1) for i in range(n - 1)], names))


def powerset_lattice(ground: list[str]) -> FinLattice:
    n = len(ground)
    masks = list(range(1 << n))
    names = ["{" + ",".join(ground[i] for i in range(n) if m >> i & 1) + "}" for m in masks]
    return lattice_of_sets(masks, names)


@cache
def C2() -> FinLattice:
    return chain(2, ["0", "1"])


@cache
def C3() -> FinLattice:
    return chain(3, ["0", "m", "1"])


@cache
def B4() -> FinLattice:
    return powerset_lattice(["a", "b"])


@cache
def B8() -> FinLattice:
    return powerset_lattice(["x", "y", "z"])


@cache
def N5() -> FinLattice:
    # 0 < a < b < 1, 0 < c < 1
    return validate_lattice(
        FinPoset.from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ["0", "a", "b", "c", "1"])
    )


@cache
def M3() -> FinLattice:
    return validate_lattice(
        FinPoset.from_covers(
            5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"]
        )
    )


LATTICES = {"C2": C2, "C3": C3, "B4": B4, "B8": B8, "N5": N5, "M3": M3}


def _pervin(ground, sets):
    from .pervin import PervinSpace

    return PervinSpace.of(ground, sets)


@cache
def SIER():
    return _pervin(["a", "b"], [[], ["a"], ["a", "b"]])


@cache
def INDISC():
    return _pervin(["a", "b"], [[], ["a", "b"]])


@cache
def P3():
    return _pervin(["x", "y", "z"], [[], ["x"], ["x", "y"], ["x", "y", "z"]])


@cache
def POINT():
    return _pervin(["x"], [[], ["x"]])


PERVIN = {"SIER": SIER, "INDISC": INDISC, "P3": P3, "POINT": POINT}
