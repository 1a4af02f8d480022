"""Exact torsion, Fredholm index and log-functor checks on finite models.

Rationals are :class:`fractions.Fraction`; matrices are lists of rows.
"""

import json

from ._torlog import (  # noqa: F401
    CochainComplex,
    DomainError,
    LogValue,
    ParseError,
    ShapeError,
    beta_is_invariant,
    betti_numbers,
    check_additivity,
    determinant,
    index_character,
    is_acyclic,
    is_sum_of_commutators,
    k1_torsion,
    laplacian,
    log_fred,
    parametrix,
    pseudo_det,
    rank,
    reidemeister,
    residue_torsion,
    run_cli,
    torsion_character,
    weighted_euler,
)


def verify(suite, trials=None, seed=1):
    """Run a verification suite; returns (all_passed, report dict)."""
    args = ["verify", "--suite", suite, "--seed", str(seed)]
    if trials is not None:
        args += ["--trials", str(trials)]
    code, out, err = run_cli(args)
    if code not in (0, 1):
        raise RuntimeError(err.strip())
    report = json.loads(out)
    return report["all_passed"], report
