"""
Nielsen-Thurston type of a braid: periodic, reducible or pseudo-Anosov.

The classifier powers the input until it is tame, tests for a power of Delta,
cycles a further power to a rigid conjugate and then looks for a standard
circle orbit on that conjugate or on one of its rigid simple conjugates.
Reducible braids can then be cut along the orbit into an exterior braid and
tube interiors, recursively.
"""

from __future__ import annotations

import enum
import math
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .braid_core import (
    BraidWord,
    PermutationBraid,
    _inverse,
    _w0,
    all_permutation_braids,
)
from .conjugacy import (
    ConjugationRecord,
    RigidConjugators,
    cycle_to_rigid,
    cycling,
    garside_length,
    is_rigid,
    sss_representative,
)
from .errors import BoundExceeded, InvalidStrandCount, OrbitInvalid
from .normal_form import (
    WeightedForm,
    conjugate_by_simple,
    mul,
    mul_simple,
    normalize,
    power,
)

Block = tuple[int, int]


# ---------------------------------------------------------------------------
# standard circles and their orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class StandardCircle:
    """The round circle around punctures i..j."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise OrbitInvalid(f"need 1 <= i < j, got ({self.i}, {self.j})")

    @property
    def width(self) -> int:
        return self.j - self.i + 1

    def is_essential(self, n: int) -> bool:
        return 2 <= self.width <= n - 1 and self.j <= n

    def overlaps(self, other: StandardCircle) -> bool:
        return not (self.j < other.i or other.j < self.i)

    def to_tuple(self) -> Block:
        return (self.i, self.j)


@dataclass(frozen=True)
class CircleOrbit:
    """
    A standard circle whose image stays standard after every factor of z and
    returns to itself after ``applications`` full passes through z.

    ``period`` counts factor steps (a multiple of l(z)); ``trajectory`` lists
    the image after each step; ``circles`` are the images at the start of each
    pass, pairwise disjoint.
    """

    circle: StandardCircle
    period: int
    applications: int
    trajectory: tuple[StandardCircle, ...]
    circles: tuple[StandardCircle, ...]

    @property
    def size(self) -> int:
        return len(self.circles)

    def to_dict(self) -> dict:
        return {
            "i": self.circle.i,
            "j": self.circle.j,
            "period": self.period,
            "applications": self.applications,
            "trajectory": [list(c.to_tuple()) for c in self.trajectory],
            "circles": [list(c.to_tuple()) for c in self.circles],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CircleOrbit:
        return cls(
            StandardCircle(data["i"], data["j"]),
            int(data["period"]),
            int(data["applications"]),
            tuple(StandardCircle(*c) for c in data["trajectory"]),
            tuple(StandardCircle(*c) for c in data["circles"]),
        )


def _block_image(lo: int, hi: int, img: tuple) -> Optional[Block]:
    vals = [img[s - 1] for s in range(lo, hi + 1)]
    a, b = min(vals), max(vals)
    return (a, b) if b - a == hi - lo else None


def _track(z: WeightedForm, lo: int, hi: int) -> Optional[CircleOrbit]:
    n = z.n
    w = hi - lo + 1
    images = [_inverse(p) for p in z._raw]
    flip = z.u % 2 == 1
    steps_per = max(len(images), 1)
    traj: list[Block] = []
    starts: list[Block] = [(lo, hi)]
    cur = (lo, hi)
    for k in range(1, n // w + 1):
        if flip:
            cur = (n + 1 - cur[1], n + 1 - cur[0])
        for img in images:
            nxt = _block_image(cur[0], cur[1], img)
            if nxt is None:
                return None
            cur = nxt
            traj.append(cur)
        if not images:
            traj.append(cur)
        if cur == (lo, hi):
            return CircleOrbit(
                StandardCircle(lo, hi),
                k * steps_per,
                k,
                tuple(StandardCircle(*b) for b in traj),
                tuple(StandardCircle(*b) for b in starts),
            )
        if any(not (cur[1] < s[0] or s[1] < cur[0]) for s in starts):
            return None
        starts.append(cur)
    return None


def standard_circle_orbit(z: WeightedForm) -> Optional[CircleOrbit]:
    """
    The lexicographically first essential standard circle (i, j) whose images
    stay standard through every factor of z, z, z, ... and come back after at
    most n // width passes, with the circles seen at pass boundaries pairwise
    disjoint. None if no block qualifies.
    """
    n = z.n
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if j - i + 1 > n - 1:
                continue
            orbit = _track(z, i, j)
            if orbit is not None:
                return orbit
    return None


def recompute_orbit(z: WeightedForm, orbit: CircleOrbit) -> bool:
    """True iff tracking orbit.circle through z reproduces the stored orbit exactly."""
    return _track(z, orbit.circle.i, orbit.circle.j) == orbit


# ---------------------------------------------------------------------------
# configuration and results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassifierConfig:
    """Every theoretical bound of the classifier as a tunable guard."""

    naive_cap: int = 6
    cycling_cap_multiplier: int = 1
    literal_bounds: bool = False
    max_cyclings: Optional[int] = None
    max_depth: Optional[int] = None
    witness_budget: int = 2000

    def __post_init__(self):
        if self.naive_cap < 0 or self.cycling_cap_multiplier < 1 or self.witness_budget < 0:
            raise ValueError("invalid classifier configuration")
        if self.max_cyclings is not None and self.max_cyclings < 0:
            raise ValueError("max_cyclings must be >= 0")


DEFAULT_CONFIG = ClassifierConfig()


class Verdict(str, enum.Enum):
    PERIODIC = "periodic"
    REDUCIBLE = "reducible"
    PSEUDO_ANOSOV = "pseudo_anosov"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Classification:
    """
    A verdict with its witness.

    ``record`` conjugates input**power to the witness braid: a Delta power
    (periodic), a braid carrying ``orbit`` (reducible) or a rigid braid with no
    rigid simple conjugate carrying a standard circle orbit (pseudo-Anosov).
    """

    verdict: Verdict
    input: WeightedForm
    M: Optional[int] = None
    N: Optional[int] = None
    power: Optional[int] = None
    record: Optional[ConjugationRecord] = None
    orbit: Optional[CircleOrbit] = None
    witness_absent: bool = False
    certificate: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    diagnostic: str = ""

    @property
    def n(self) -> int:
        return self.input.n

    @property
    def conclusive(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE

    def verify(self) -> bool:
        """Recheck the witness by direct multiplication and orbit recomputation."""
        if self.verdict is Verdict.INCONCLUSIVE:
            return True
        if self.record is None:
            return self.verdict is Verdict.REDUCIBLE and self.witness_absent
        if self.record.base != power(self.input, self.power or 1):
            return False
        if not self.record.verify():
            return False
        z = self.record.current
        if self.verdict is Verdict.PERIODIC:
            return z.is_delta_power()
        if self.verdict is Verdict.REDUCIBLE:
            return self.orbit is not None and recompute_orbit(z, self.orbit)
        return is_rigid(z) and standard_circle_orbit(z) is None

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "n": self.n}
        if self.M is not None:
            out["M"] = self.M
        if self.N is not None:
            out["N"] = self.N
        if self.orbit is not None:
            o = self.orbit
            out["circle"] = {"i": o.circle.i, "j": o.circle.j, "period": o.period}
            out["orbit"] = o.to_dict()
        if self.record is not None:
            out["conjugator"] = list(self.record.conjugator.word().letters)
            out["power"] = self.power
            out["witness"] = self.record.to_dict()
        out["input"] = self.input.to_dict()
        if self.witness_absent:
            out["witness_absent"] = True
        if self.certificate:
            out["certificate"] = dict(self.certificate)
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        out["stats"] = dict(self.stats)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Classification:
        rec = data.get("witness")
        orb = data.get("orbit")
        return cls(
            verdict=Verdict(data["verdict"]),
            input=WeightedForm.from_dict(data["input"]),
            M=data.get("M"),
            N=data.get("N"),
            power=data.get("power"),
            record=ConjugationRecord.from_dict(rec) if rec else None,
            orbit=CircleOrbit.from_dict(orb) if orb else None,
            witness_absent=bool(data.get("witness_absent", False)),
            certificate=dict(data.get("certificate", {})),
            stats=dict(data.get("stats", {})),
            diagnostic=data.get("diagnostic", ""),
        )


# ---------------------------------------------------------------------------
# tame power
# ---------------------------------------------------------------------------

def find_tame_power(x: WeightedForm, literal_bounds: bool = False) -> tuple[int, ConjugationRecord]:
    """
    Least M <= D^2 with inf_c(x^(MD)) = D inf_c(x^M) and likewise for sup_c,
    summit values read off super summit representatives. Returns M with the
    super summit record of x^M.
    """
    D = garside_length(x.n)
    xj = WeightedForm.identity(x.n)
    for j in range(1, D * D + 1):
        xj = mul(xj, x)
        rec = sss_representative(xj, literal_bounds)
        s = rec.current
        big = sss_representative(power(xj, D), literal_bounds).current
        if big.inf == D * s.inf and big.sup == D * s.sup:
            return j, rec
    raise BoundExceeded(f"no tame power of {x} up to D^2 = {D * D}")


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------

def _as_form(w: Union[BraidWord, WeightedForm]) -> WeightedForm:
    return normalize(w) if isinstance(w, BraidWord) else w


def _sss_circle_search(x: WeightedForm, literal_bounds: bool, budget: int
                       ) -> tuple[Optional[tuple[ConjugationRecord, CircleOrbit]], int]:
    """
    Look for a standard circle orbit on x or on an element of its super summit
    set, breadth first under simple conjugation. Returns the hit (if any) and
    the number of conjugations spent.
    """
    spent = 0
    orbit = standard_circle_orbit(x)
    if orbit is not None:
        return (ConjugationRecord.trivial(x), orbit), spent
    rec = sss_representative(x, literal_bounds)
    start = rec.current
    best = (start.inf, start.sup)
    seen = {start.key()}
    queue = deque([rec])
    simples = [p for p in all_permutation_braids(x.n) if not p.is_identity()]
    while queue:
        r = queue.popleft()
        orbit = standard_circle_orbit(r.current)
        if orbit is not None:
            return (r, orbit), spent
        for t in simples:
            if spent >= budget:
                return None, spent
            spent += 1
            y = conjugate_by_simple(r.current, t)
            if (y.inf, y.sup) != best or y.key() in seen:
                continue
            seen.add(y.key())
            queue.append(r.extend_simple(t, y))
    return None, spent


def _power_record(x: WeightedForm, P: int, conj: WeightedForm, current: WeightedForm) -> ConjugationRecord:
    return ConjugationRecord(power(x, P), conj, current)


def classify(w: Union[BraidWord, WeightedForm], config: ClassifierConfig = DEFAULT_CONFIG) -> Classification:
    """Decide periodic / reducible / pseudo-Anosov, with a re-verifiable witness."""
    x = _as_form(w)
    t0 = time.perf_counter()
    stats = {"cyclings": 0, "conjugators_tested": 0, "wall_ms": 0}

    def done(c: Classification) -> Classification:
        stats["wall_ms"] = int(round((time.perf_counter() - t0) * 1000))
        c.stats = stats
        return c

    n = x.n
    if n < 2:
        raise InvalidStrandCount(f"n={n}")
    if n == 2 or x.is_delta_power():
        # sigma_1^k = Delta^k in B_2
        return done(Classification(Verdict.PERIODIC, x, M=1, power=1, record=ConjugationRecord.trivial(x)))

    D = garside_length(n)

    # tame power
    M, srec = find_tame_power(x, config.literal_bounds)
    s = srec.current

    # Delta-power check
    if s.is_delta_power():
        return done(Classification(Verdict.PERIODIC, x, M=M, power=M, record=srec))
    P = 2 * D * M
    y = power(s, 2 * D)
    base_conj = srec.conjugator
    if y.is_delta_power():
        rec = _power_record(x, P, base_conj, y)
        return done(Classification(Verdict.PERIODIC, x, M=M, power=P, record=rec,
                                   diagnostic="Delta power reached at exponent 2D"))

    # iterated cycling towards a rigid conjugate
    cap = config.max_cyclings
    if cap is None:
        cap = math.factorial(n) * len(y.factors) * config.cycling_cap_multiplier
    search = cycle_to_rigid(y, cap, keep_orbit=True)
    stats["cyclings"] = search.steps
    if search.outcome == "cap":
        return done(Classification(Verdict.INCONCLUSIVE, x, M=M, diagnostic=f"no rigid conjugate within {cap} cyclings"))
    if search.outcome == "cycle":
        return done(_reducible_from_cycle(x, M, P, base_conj, search.orbit, config, stats))

    z = search.record.current
    N = search.N
    zconj = mul(base_conj, search.record.conjugator)

    # circle search among rigid conjugates
    hit, cert = rigid_circle_search(z, config)
    stats["conjugators_tested"] = cert["tested"]
    if hit is not None:
        t, zt, orbit = hit
        wit = _witness(x, config, stats)
        if wit is not None:
            rec, orbit_x = wit
            return done(Classification(Verdict.REDUCIBLE, x, M=M, N=N, power=1, record=rec, orbit=orbit_x,
                                       certificate=cert))
        rec = _power_record(x, P, mul_simple(zconj, t), zt)
        return done(Classification(Verdict.REDUCIBLE, x, M=M, N=N, power=P, record=rec, orbit=orbit,
                                   certificate=cert))
    rec = _power_record(x, P, zconj, z)
    if not cert["exhaustive"]:
        return done(Classification(Verdict.INCONCLUSIVE, x, M=M, N=N, power=P, record=rec, certificate=cert,
                                   diagnostic=f"n={n} exceeds naive_cap={config.naive_cap}; closure search alone is not a certificate"))
    return done(Classification(Verdict.PSEUDO_ANOSOV, x, M=M, N=N, power=P, record=rec, certificate=cert))


def rigid_circle_search(z: WeightedForm, config: ClassifierConfig):
    """
    Simple t with t^-1 z t rigid and carrying a standard circle orbit. The
    meet-closed family of rigid conjugators is walked first; for n <= naive_cap
    every remaining simple element is then tried as well.
    """
    rc = RigidConjugators(z)
    checked: set = set()
    cert = {"method": "closure", "tested": 0, "exhaustive": False, "closure_size": 0}

    def probe(t):
        y = rc.conjugate(t)
        checked.add(t)
        if y is None:
            return None
        orbit = standard_circle_orbit(y)
        return (PermutationBraid._of(t), y, orbit) if orbit is not None else None

    for t in rc.closure():
        cert["closure_size"] += 1
        hit = probe(t)
        if hit is not None:
            cert["tested"] = rc.tested
            return hit, cert
    if z.n <= config.naive_cap:
        cert["method"] = "closure+sweep"
        for p in all_permutation_braids(z.n):
            if p.perm in checked:
                continue
            hit = probe(p.perm)
            if hit is not None:
                cert["tested"] = rc.tested
                cert["closure_incomplete"] = True
                return hit, cert
        cert["exhaustive"] = True
    cert["tested"] = rc.tested
    return None, cert


def _witness(x: WeightedForm, config: ClassifierConfig, stats: dict):
    hit, spent = _sss_circle_search(x, config.literal_bounds, config.witness_budget)
    stats["conjugators_tested"] += spent
    return hit


def _reducible_from_cycle(x, M, P, base_conj, orbit_forms, config, stats) -> Classification:
    """Cycling closed a cycling orbit with no rigid element: reducible; now find circles."""
    cert = {"method": "cycling-orbit"}
    wit = _witness(x, config, stats)
    if wit is not None:
        rec, orbit = wit
        return Classification(Verdict.REDUCIBLE, x, M=M, power=1, record=rec, orbit=orbit, certificate=cert)
    conj = base_conj
    prev = None
    for y in orbit_forms:
        if prev is not None:
            _, t = cycling(prev)
            conj = mul_simple(conj, t)
        prev = y
        orbit = standard_circle_orbit(y)
        if orbit is not None:
            return Classification(Verdict.REDUCIBLE, x, M=M, power=P, record=_power_record(x, P, conj, y),
                                  orbit=orbit, certificate=cert)
    return Classification(Verdict.REDUCIBLE, x, M=M, witness_absent=True, certificate=cert,
                          diagnostic="cycling orbit closed without a rigid element; no circle witness within budget")


# ---------------------------------------------------------------------------
# splitting along an orbit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Split:
    """z**applications cut along the tubes over ``orbit.circles``."""

    braid: WeightedForm
    orbit: CircleOrbit
    exterior: WeightedForm
    interiors: tuple[WeightedForm, ...]

    def reembedded(self) -> BraidWord:
        return reembed(self.exterior, self.interiors, [c.to_tuple() for c in self.orbit.circles], self.braid.n)


def _steps(z: WeightedForm, k: int) -> list:
    """z^k as a list of ('D', +-1) and ('s', perm) steps, z's form repeated k times."""
    one = [("D", 1 if z.u > 0 else -1)] * abs(z.u) + [("s", p) for p in z._raw]
    return one * k


def _units(n: int, tubes: Sequence[Block]) -> list[Block]:
    """Positions 1..n grouped into strands and tubes, left to right."""
    starts = {lo: hi for lo, hi in tubes}
    out, p = [], 1
    while p <= n:
        hi = starts.get(p, p)
        out.append((p, hi))
        p = hi + 1
    return out


def split_along_orbit(z: WeightedForm, orbit: CircleOrbit) -> Split:
    """Cut z^k (k = orbit.applications, so each circle is fixed) into exterior and interiors."""
    if not recompute_orbit(z, orbit):
        raise OrbitInvalid("orbit does not recompute on z")
    n = z.n
    k = orbit.applications
    w = orbit.circle.width
    tubes = [c.to_tuple() for c in orbit.circles]
    n_ext = n - len(tubes) * w + len(tubes)
    ext = WeightedForm.identity(n_ext)
    ints = [WeightedForm.identity(w) for _ in tubes]
    cur = list(tubes)
    for kind, val in _steps(z, k):
        units = _units(n, cur)
        if kind == "D":
            img = _w0(n)
            ext = mul(ext, WeightedForm.delta_power(n_ext, val))
            ints = [mul(f, WeightedForm.delta_power(w, val)) for f in ints]
        else:
            img = _inverse(val)
        new = []
        for lo, hi in cur:
            b = _block_image(lo, hi, img)
            if b is None:
                raise OrbitInvalid("tube image is not a consecutive block")
            new.append(b)
        new_units = _units(n, new)
        index_after = {u: a for a, u in enumerate(new_units, 1)}
        if kind == "s":
            # forward map on units, turned into a permutation braid on n_ext strands
            fwd = []
            for lo, hi in units:
                b = (img[lo - 1], img[lo - 1]) if lo == hi else _block_image(lo, hi, img)
                fwd.append(index_after[b])
            ext = mul_simple(ext, PermutationBraid._of(_inverse(tuple(fwd))))
            for a, (lo, hi) in enumerate(cur):
                rel = [img[s - 1] for s in range(lo, hi + 1)]
                base = min(rel)
                ints[a] = mul_simple(ints[a], PermutationBraid._of(_inverse(tuple(v - base + 1 for v in rel))))
        cur = new
    if cur != tubes:
        raise OrbitInvalid("tubes do not return to their starting blocks")
    return Split(power(z, k), orbit, ext, tuple(ints))


def cable_word(ext: BraidWord, widths: Sequence[int]) -> BraidWord:
    """Replace each strand of ext by a ribbon of widths[a] parallel strands (widths at the top)."""
    if len(widths) != ext.n:
        raise ValueError("one width per exterior strand")
    widths = list(widths)
    n = sum(widths)
    letters: list[int] = []
    for a in ext.letters:
        i = abs(a)
        off = sum(widths[: i - 1])
        p, q = widths[i - 1], widths[i]
        # the positive ribbon crossing with widths (l, r) on top; an inverse
        # crossing is the inverse of the positive one whose top is our bottom
        l, r = (p, q) if a > 0 else (q, p)
        cross = []
        for s in range(l - 1, -1, -1):
            cross.extend(off + s + c + 1 for c in range(r))
        letters.extend(cross if a > 0 else [-c for c in reversed(cross)])
        widths[i - 1], widths[i] = q, p
    return BraidWord(n, tuple(letters))


def reembed(exterior: WeightedForm, interiors: Sequence[WeightedForm], tubes: Sequence[Block], n: int) -> BraidWord:
    """cable(exterior) followed by each interior placed inside its tube."""
    units = _units(n, tubes)
    widths = [hi - lo + 1 for lo, hi in units]
    letters = list(cable_word(exterior.word(), widths).letters)
    for (lo, _), f in zip(tubes, interiors):
        letters.extend(a + lo - 1 if a > 0 else a - lo + 1 for a in f.word().letters)
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# reduction trees
# ---------------------------------------------------------------------------

@dataclass
class ReductionTree:
    braid: WeightedForm
    classification: Classification
    split: Optional[Split] = None
    children: list[ReductionTree] = field(default_factory=list)
    role: str = "root"

    @property
    def verdict(self) -> Verdict:
        return self.classification.verdict

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def leaves(self) -> list[ReductionTree]:
        return [t for t in self.walk() if not t.children]

    @property
    def inconclusive(self) -> bool:
        return any(t.verdict is Verdict.INCONCLUSIVE for t in self.walk())

    def to_dict(self) -> dict:
        out = {
            "role": self.role,
            "n": self.braid.n,
            "braid": self.braid.to_dict(),
            "verdict": self.verdict.value,
        }
        if self.split is not None:
            o = self.split.orbit
            out["circle"] = {"i": o.circle.i, "j": o.circle.j, "period": o.period}
            out["power"] = (self.classification.power or 1) * o.applications
        out["children"] = [c.to_dict() for c in self.children]
        return out

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        line = f"{pad}{self.role}: {self.braid}  [{self.verdict.value}]"
        if self.split is not None:
            o = self.split.orbit
            line += f"  circle ({o.circle.i},{o.circle.j}) x{o.size}, power {(self.classification.power or 1) * o.applications}"
        return "\n".join([line] + [c.render(indent + 1) for c in self.children])


def reduction_tree(w: Union[BraidWord, WeightedForm], config: ClassifierConfig = DEFAULT_CONFIG) -> ReductionTree:
    """Classify; on a reducible verdict cut along the witness orbit and recurse."""
    x = _as_form(w)
    depth = config.max_depth if config.max_depth is not None else x.n
    return _tree(x, config, depth, "root")


def _tree(x: WeightedForm, config: ClassifierConfig, depth: int, role: str) -> ReductionTree:
    c = classify(x, config)
    node = ReductionTree(x, c, role=role)
    if c.verdict is not Verdict.REDUCIBLE or c.orbit is None or c.record is None:
        return node
    if depth <= 0:
        c.diagnostic = (c.diagnostic + "; " if c.diagnostic else "") + "depth limit reached"
        return node
    sp = split_along_orbit(c.record.current, c.orbit)
    node.split = sp
    node.children.append(_tree(sp.exterior, config, depth - 1, "exterior"))
    for a, f in enumerate(sp.interiors, 1):
        node.children.append(_tree(f, config, depth - 1, f"interior {a}"))
    return node


def circle_word(n: int, tubes: Sequence[Block], ext_letters: Sequence[int],
                int_letters: Sequence[Sequence[int]]) -> BraidWord:
    """
    A braid preserving the given disjoint standard circles: the exterior word on
    collapsed strands, cabled, followed by interior words inside each tube.
    """
    tubes = sorted(tubes)
    units = _units(n, tubes)
    ext = normalize(BraidWord(len(units), tuple(ext_letters)))
    ints = [normalize(BraidWord(hi - lo + 1, tuple(ls))) for (lo, hi), ls in zip(tubes, int_letters)]
    return reembed(ext, ints, tubes, n)


__all__ = [
    "StandardCircle",
    "CircleOrbit",
    "ClassifierConfig",
    "DEFAULT_CONFIG",
    "Verdict",
    "Classification",
    "Split",
    "ReductionTree",
    "standard_circle_orbit",
    "recompute_orbit",
    "find_tame_power",
    "classify",
    "rigid_circle_search",
    "split_along_orbit",
    "cable_word",
    "reembed",
    "reduction_tree",
    "circle_word",
]
