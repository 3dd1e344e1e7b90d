"""Independent checks: degeneration limits, orbit sampling and verification suites."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import laurent as lr
from .covers import (
    CoverMove,
    brute_force_lower_covers,
    brute_force_lower_rank,
    brute_force_same_rank,
    cover_moves,
    hasse_covers,
    lower_covers_lower_rank,
    lower_covers_same_rank,
)
from .ideals import ideal_generators
from .involutions import Involution, enumerate_involutions, matrix_of, orbit_dimension
from .linalg import (
    Matrix,
    as_fraction_matrix,
    centralizer_dimension,
    is_zero,
    matmul,
    upper_triangular_inverse,
)
from .polynomials import evaluate
from .rank import rank_matrix, rank_matrix_of

K = lr.Laurent.monomial(1, 1)
INV_K = lr.Laurent.monomial(1, -1)


def _const(c) -> lr.Laurent:
    return lr.Laurent.const(c)


def degeneration_family(sigma: Involution, move: CoverMove) -> list[lr.Factor]:
    """Factors of a one-parameter family ``A(k)`` in B degenerating ``sigma`` to ``move.target``."""
    if move.source != sigma:
        raise ValueError(f"move starts at {move.source}, not {sigma}")
    d = move.data
    cyc = sigma.cycles
    i_s, j_s = cyc[d["s"] - 1]
    if move.kind == "drop":
        return [lr.Diag(i_s, INV_K)]
    if move.kind == "up":
        return [lr.Diag(i_s, INV_K), lr.Unit(d["m"], i_s, _const(1))]
    if move.kind == "right":
        return [lr.Diag(i_s, INV_K), lr.Unit(j_s, d["m"], -K)]
    if move.kind == "cross":
        i_r, j_r = cyc[d["r"] - 1]
        return [lr.Diag(i_r, -INV_K), lr.Diag(i_s, INV_K), lr.Unit(j_r, i_s, _const(1))]
    if move.kind == "swap":
        i_t, j_t = cyc[d["t"] - 1]
        return [lr.Diag(j_t, K), lr.Diag(j_s, -INV_K), lr.Unit(i_s, i_t, K), lr.Unit(j_t, j_s, INV_K)]
    raise ValueError(f"unknown move kind {move.kind!r}")


class PositivePowerResidue(ArithmeticError):
    """The conjugate still grows with ``k``; the family does not converge."""


def conjugate_limit(factors: Sequence[lr.Factor], N: Sequence[Sequence]) -> Matrix:
    """Constant term of ``A(k) N A(k)^-1`` after checking no entry grows with ``k``."""
    n = len(N)
    A = lr.product(factors, n)
    A_inv = lr.inverse_product(factors, n)
    check = lr.matmul(A, A_inv)
    if check != lr.identity(n):
        raise ArithmeticError("factor inverses do not multiply to the identity")
    conj = lr.matmul(lr.matmul(A, lr.lift(N)), A_inv)
    out = []
    for r, row in enumerate(conj):
        for c, x in enumerate(row):
            top = x.max_degree()
            if top is not None and top > 0:
                raise PositivePowerResidue(f"entry ({r + 1},{c + 1}) = {x!r}")
        out.append([x.coefficient(0) for x in row])
    return out


def random_upper_triangular(n: int, rng: random.Random) -> Matrix:
    return [
        [Fraction(rng.choice((1, 2, 3)) if a == b else rng.randint(-3, 3) if a < b else 0) for b in range(n)]
        for a in range(n)
    ]


def conjugate(A: Matrix, u: Sequence[Sequence]) -> Matrix:
    return matmul(matmul(A, as_fraction_matrix(u)), upper_triangular_inverse(A))


def random_orbit_point(sigma: Involution, seed: int) -> Matrix:
    """``A N_sigma A^-1`` for a seeded random invertible upper-triangular ``A``."""
    A = random_upper_triangular(sigma.n, random.Random(seed))
    return conjugate(A, matrix_of(sigma))


def closure_membership(u: Sequence[Sequence], sigma: Involution) -> bool:
    """Whether ``u`` lies in the closure of the B-orbit of ``N_sigma``."""
    mat = as_fraction_matrix(u)
    if len(mat) != sigma.n:
        raise ValueError(f"matrix size {len(mat)} does not match n={sigma.n}")
    if not is_zero(matmul(mat, mat)):
        return False
    return bool(np.all(rank_matrix_of(mat) <= rank_matrix(sigma)))


# verification suites ------------------------------------------------------

Check = dict


def _record(name: str, params: dict, passed: bool, counterexample=None) -> Check:
    rec = {"name": name, "params": params, "passed": bool(passed)}
    if not passed and counterexample is not None:
        rec["counterexample"] = counterexample
    return rec


def suite_dimension(max_n: int, seed: int = 0) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        bad = [
            str(s)
            for s in enumerate_involutions(n)
            if orbit_dimension(s) + centralizer_dimension(matrix_of(s)) != n * (n + 1) // 2
        ]
        out.append(_record("dimension_formula_vs_centralizer", {"n": n}, not bad, bad[:5]))
    return out


def suite_covers(max_n: int, seed: int = 0) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        bad_same, bad_lower, bad_hasse = [], [], []
        for s in enumerate_involutions(n):
            if lower_covers_same_rank(s) != brute_force_same_rank(s):
                bad_same.append(str(s))
            if lower_covers_lower_rank(s) != brute_force_lower_rank(s):
                bad_lower.append(str(s))
            if hasse_covers(s) != brute_force_lower_covers(s):
                bad_hasse.append(str(s))
        out.append(_record("same_length_covers", {"n": n}, not bad_same, bad_same[:5]))
        out.append(_record("length_dropping_covers", {"n": n}, not bad_lower, bad_lower[:5]))
        out.append(_record("hasse_covers", {"n": n}, not bad_hasse, bad_hasse[:5]))
    return out


def suite_degeneration(max_n: int, seed: int = 0) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        bad = []
        total = 0
        for s in enumerate_involutions(n):
            N = matrix_of(s)
            for mv in cover_moves(s):
                total += 1
                try:
                    limit = conjugate_limit(degeneration_family(s, mv), N)
                except PositivePowerResidue as exc:
                    bad.append({"move": mv.to_json(), "error": str(exc)})
                    continue
                if limit != matrix_of(mv.target):
                    bad.append({"move": mv.to_json(), "error": "wrong limit"})
        out.append(_record("degeneration_limits", {"n": n, "moves": total}, not bad, bad[:5]))
    return out


def suite_sampling(max_n: int, seed: int = 0, seeds: int = 20) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        invs = enumerate_involutions(n)
        bad = []
        for s2 in invs:
            points = [random_orbit_point(s2, seed + k) for k in range(seeds)]
            for s in invs:
                expected = bool(np.all(rank_matrix(s2) <= rank_matrix(s)))
                if any(closure_membership(u, s) != expected for u in points):
                    bad.append([str(s2), str(s)])
        out.append(_record("closure_membership_sampling", {"n": n, "seeds": seeds, "seed": seed}, not bad, bad[:5]))
    return out


def suite_ideals(max_n: int, seed: int = 0, seeds: int = 20) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        invs = enumerate_involutions(n)
        gens = {s: ideal_generators(s, "pruned").all() for s in invs}
        bad = []
        for s2 in invs:
            points = [random_orbit_point(s2, seed + k) for k in range(seeds)]
            for s in invs:
                expected = bool(np.all(rank_matrix(s2) <= rank_matrix(s)))
                for u in points:
                    vanish = all(evaluate(g, u) == 0 for g in gens[s])
                    if vanish != expected:
                        bad.append([str(s2), str(s)])
                        break
        out.append(_record("ideal_vanishing_sampling", {"n": n, "seeds": seeds, "seed": seed}, not bad, bad[:5]))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "dimension": suite_dimension,
    "covers": suite_covers,
    "degeneration": suite_degeneration,
    "sampling": suite_sampling,
    "ideals": suite_ideals,
}


def run_suites(names: Sequence[str], max_n: int, seed: int = 0) -> dict:
    """Run the named suites and collect a JSON-ready report."""
    unknown = [x for x in names if x not in SUITES and x != "all"]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)} or 'all'")
    chosen = list(SUITES) if "all" in names else list(names)
    checks = []
    for name in chosen:
        for rec in SUITES[name](max_n, seed):
            rec["suite"] = name
            checks.append(rec)
    return {"max_n": max_n, "seed": seed, "passed": all(c["passed"] for c in checks), "checks": checks}
