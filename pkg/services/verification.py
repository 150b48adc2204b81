"""
Theorem verification suites.

Each suite runs a corpus (exhaustive or seeded) through the witness-producing
functions and records one TheoremCheck per statement. A failing instance is
serialized into the check so it can be replayed; nothing here raises on a
finding.
"""

import logging
import random
from typing import Callable, Dict, List

import config
from models import TheoremCheck, VerificationReport
from services.antipode import Cycle, NBox, box_boundary, cycle_antipode
from services.borsuk_ulam import (
    Variant,
    antipodal_witness_1d,
    antipodal_witness_high_dim,
    counterexample_fixture,
    counterexample_report,
    exact_antipodal_points,
    ivt_witness,
    simplex_coincidence_witness,
)
from services.antipode import box_involution
from services.corpus import (
    all_interval_functions,
    interval,
    random_continuous_function,
    random_image,
    random_interval_function,
    random_scalar_function,
)
from services.errors import DigitalTopologyError, InvalidInputError, TheoremViolation
from services.lattice import CK, Power
from services.maps import (
    GridFunction,
    compose,
    is_continuous,
    min_lipschitz,
    pointwise_combine,
    power_continuity_equivalent,
    scalar_function,
)

logger = logging.getLogger(__name__)

SCOPES = ("dim1", "highdim", "counterexample", "lipschitz", "all")
MAX_RECORDED_FAILURES = 20


def _values(f: GridFunction) -> Dict[str, list]:
    return {str(p): list(v) for p, v in f.values.items()}


class _Check:
    """Accumulates instances and failures for one TheoremCheck."""

    def __init__(self, name: str, statement: str):
        self.name = name
        self.statement = statement
        self.instances = 0
        self.failures: List[dict] = []
        self.failed = 0
        self.observed_max = None

    def record(self, ok: bool, instance: Callable[[], dict]) -> None:
        self.instances += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(instance())

    def observe(self, value: int) -> None:
        if self.observed_max is None or value > self.observed_max:
            self.observed_max = value

    def result(self) -> TheoremCheck:
        if self.failed:
            logger.warning("%s: %d of %d instances failed", self.name, self.failed, self.instances)
        return TheoremCheck(
            name=self.name,
            statement=self.statement,
            passed=self.failed == 0 and self.instances > 0,
            instances=self.instances,
            failures=self.failures,
            observed_max=self.observed_max,
        )


# ============================================================================
# Dimension one
# ============================================================================

def _c8_example() -> TheoremCheck:
    check = _Check("c8-example", "(0,0,1,2,2,2,2,1) on C_8 is continuous, has no f(x)=f(-x), and a gap-1 pair")
    cycle = Cycle(8)
    inv = cycle_antipode(cycle)
    f = scalar_function(cycle.image, (0, 0, 1, 2, 2, 2, 2, 1))
    witness = antipodal_witness_1d(cycle.image, inv, f)
    ok = is_continuous(f) and not exact_antipodal_points(inv, f) and witness.distance == 1
    check.record(ok, lambda: {"values": _values(f), "witness": witness.model_dump(mode="json")})
    check.observe(witness.distance)
    return check.result()


def _dim1_exhaustive() -> List[TheoremCheck]:
    antipodal = _Check("dim1-exhaustive", "every f: C_n -> [0,3] with Lipschitz constant m has |f(x)-f(-x)| < 2m")
    ivt = _Check("ivt-exhaustive", "every valid (x, y, c) gives z with |f(z)-c| < m")
    sharp = _Check("dim1-sharpness", "the gap 2m-1 is attained on C_8 for m=1")

    for n in (4, 6, 8):
        cycle = Cycle(n)
        inv = cycle_antipode(cycle)
        points = cycle.image.sorted_points
        for f in all_interval_functions(cycle.image, 3):
            m_f = min_lipschitz(f).constant
            if m_f > 2:
                continue
            witness = antipodal_witness_1d(cycle.image, inv, f)
            for m in (1, 2):
                if m_f > m:
                    continue
                antipodal.record(
                    witness.distance < 2 * m,
                    lambda: {"n": n, "m": m, "values": _values(f), "gap": witness.distance},
                )
                if n == 8 and m == 1:
                    sharp.observe(witness.distance)

                x = min(points, key=lambda p: (f.scalar(p), p))
                for y in points:
                    for c in range(f.scalar(x), f.scalar(y) + 1):
                        try:
                            z = ivt_witness(cycle.image, f, m, x, y, c)
                            ok = abs(f.scalar(z) - c) < m
                        except TheoremViolation:
                            ok = False
                        ivt.record(ok, lambda: {"n": n, "m": m, "values": _values(f), "x": x, "y": y, "c": c})
            antipodal.observe(witness.distance)

    sharp.record(sharp.observed_max == 1, lambda: {"observed_max": sharp.observed_max})
    return [antipodal.result(), ivt.result(), sharp.result()]


def dim1_checks() -> List[TheoremCheck]:
    return [_c8_example(), *_dim1_exhaustive()]


# ============================================================================
# Boxes
# ============================================================================

def _highdim_corpus(name: str, statement: str, codomain, variant: Variant, m: int, samples: int, rng: random.Random) -> TheoremCheck:
    check = _Check(name, statement)
    box = NBox.cube(3)
    boundary = box_boundary(box, 3)
    for _ in range(samples):
        f = random_continuous_function(boundary, codomain, rng, steps=rng.randint(10, 120))
        try:
            witness = antipodal_witness_high_dim(box, f, variant, m=m, cross_validate=True)
            check.observe(witness.distance)
            check.record(True, dict)
        except TheoremViolation as e:
            check.record(False, lambda: {"error": str(e), **e.instance})
    return check.result()


def highdim_checks(seed: int) -> List[TheoremCheck]:
    rng = random.Random(seed)
    return [
        _highdim_corpus(
            "highdim-c1",
            "(c_3,c_1)-continuous f on the boundary of [-1,1]^3 has f(x) c_1-adjacent-or-equal to f(-x)",
            CK(2, 1), Variant.C1, 1, config.HIGHDIM_SAMPLES, rng,
        ),
        _highdim_corpus(
            "highdim-c1-power",
            "(c_3,c_1^2)-continuous f has f(x) c_1^4-adjacent-or-equal to f(-x)",
            Power(CK(2, 1), 2), Variant.C1_POWER, 2, config.HIGHDIM_POWER_SAMPLES, rng,
        ),
        _highdim_corpus(
            "highdim-cn-1",
            "(c_3,c_2)-continuous f has f(x) c_2-adjacent-or-equal to f(-x)",
            CK(2, 2), Variant.CN_MINUS_1, 1, config.HIGHDIM_POWER_SAMPLES, rng,
        ),
    ]


def counterexample_checks() -> List[TheoremCheck]:
    report = counterexample_report()
    claims = _Check("counterexample", "(c_1,c_1)-continuous, no c_1 antipodal match, (c_2,c_1)/(c_3,c_1) break at (0,1,0)-(1,0,0)")
    claims.record(report.claims_reproduced, lambda: report.model_dump(mode="json"))

    lemma = _Check("counterexample-simplex", "the simplex lemma still finds sigma with meeting image hulls")
    box, f = counterexample_fixture()
    try:
        simplex_coincidence_witness(f.domain, box_involution(box, 3), f)
        lemma.record(True, dict)
    except TheoremViolation as e:
        lemma.record(False, lambda: {"error": str(e)})
    return [claims.result(), lemma.result()]


# ============================================================================
# Lipschitz algebra
# ============================================================================

def lipschitz_checks(seed: int, pairs: int = 1000) -> List[TheoremCheck]:
    rng = random.Random(seed)
    combine = _Check("lipschitz-combination", "c1*f + c2*g has constant <= |c1| m_f + |c2| m_g")
    composition = _Check("lipschitz-composition", "f o g has constant <= m_f * m_g")
    power = _Check("lipschitz-power", "constant m <=> (kappa, lambda^m)-continuous, m in 1..4")
    continuity = _Check("lipschitz-continuity", "continuous <=> constant <= 1")

    for _ in range(pairs):
        image = random_image(rng)
        f = random_scalar_function(image, rng)
        g = random_scalar_function(image, rng)
        c1, c2 = rng.randint(-3, 3), rng.randint(-3, 3)
        m_f, m_g = min_lipschitz(f).constant, min_lipschitz(g).constant
        h = pointwise_combine(f, g, c1, c2)
        combine.record(
            min_lipschitz(h).constant <= abs(c1) * m_f + abs(c2) * m_g,
            lambda: {"f": _values(f), "g": _values(g), "c1": c1, "c2": c2},
        )

        top = rng.randint(1, 6)
        inner = random_interval_function(image, rng, top)
        outer = random_scalar_function(interval(top), rng)
        composite = compose(inner, outer)
        composition.record(
            min_lipschitz(composite).constant <= min_lipschitz(inner).constant * min_lipschitz(outer).constant,
            lambda: {"inner": _values(inner), "outer": _values(outer)},
        )

        for m in (1, 2, 3, 4):
            power.record(power_continuity_equivalent(f, m), lambda: {"f": _values(f), "m": m})
        continuity.record(is_continuous(f) == (m_f <= 1), lambda: {"f": _values(f)})

    return [combine.result(), composition.result(), power.result(), continuity.result()]


def verify_suite(scope: str = "all", seed: int = config.DEFAULT_SEED) -> VerificationReport:
    """
    Run the selected theorem corpora.

    Args:
        scope: dim1, highdim, counterexample, lipschitz or all
        seed: Seed of every randomized corpus

    Returns:
        VerificationReport with one TheoremCheck per statement
    """
    if scope not in SCOPES:
        raise InvalidInputError(f"scope must be one of {', '.join(SCOPES)}, got {scope!r}")
    checks: List[TheoremCheck] = []
    try:
        if scope in ("dim1", "all"):
            checks += dim1_checks()
        if scope in ("highdim", "all"):
            checks += highdim_checks(seed)
        if scope in ("counterexample", "all"):
            checks += counterexample_checks()
        if scope in ("lipschitz", "all"):
            checks += lipschitz_checks(seed)
    except DigitalTopologyError:
        logger.exception("verification suite %s aborted", scope)
        raise
    report = VerificationReport(scope=scope, seed=seed, checks=checks)
    logger.info("verify %s (seed %d): %s", scope, seed, "passed" if report.passed else "FAILED")
    return report
