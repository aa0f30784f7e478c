"""Vogan diagrams on generalized Cartan matrices and their equivalences.

A Vogan diagram is a GCM together with an involutive diagram automorphism
sigma and a painted subset of the sigma-fixed vertices.  Two paintings are
equivalent when one maps to the other under a sequence of

  (a) relabelings by diagram automorphisms commuting with sigma, and
  (b) F-moves at painted vertices.

The F-move at a painted vertex i keeps i painted and flips the color of
every other fixed vertex j with a[i][j] odd.  This parity rule comes from
the simple-reflection formula s_i(alpha_j) = alpha_j - a[i][j] alpha_i: the
noncompact status of j changes by a[i][j] copies of the noncompact alpha_i.
On single, double and triple edges it reproduces the classical case rules
(the double-edge neighbor keeps its color exactly when it sits on the even
entry); for bold edges it is the natural extension and is the convention
this library commits to.

Computed partitions are the ground truth here: claimed partitions from the
literature are audited against them, never the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import _iso, kernels
from .exceptions import (
    InvalidInvolution,
    RankTooLarge,
    TooManyFixedVertices,
    UnpaintedVertex,
    VertexNotFixed,
)
from .gcm import GeneralizedCartanMatrix

MAX_AUTOMORPHISM_RANK = 16
MAX_FIXED_VERTICES = 24

Painting = frozenset[int]


def canon(painting: Iterable[int]) -> tuple[int, ...]:
    """Canonical encoding of a painting: sorted vertex tuple."""
    return tuple(sorted(painting))


def _painting_key(painting: Iterable[int]) -> tuple:
    p = canon(painting)
    return (len(p), p)


# ---------------------------------------------------------------------------
# involutions

@dataclass(frozen=True)
class DiagramInvolution:
    """Label-preserving vertex permutation of order <= 2."""

    perm: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.perm[i]

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def fixed(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.perm) if p == i)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, p) for i, p in enumerate(self.perm) if p > i
        )


def identity_involution(g: GeneralizedCartanMatrix) -> DiagramInvolution:
    return DiagramInvolution(tuple(range(g.n)))


def involution(g: GeneralizedCartanMatrix, perm: Sequence[int]) -> DiagramInvolution:
    """Validate perm as an order-<=2 label-preserving permutation of g."""
    p = tuple(perm)
    if sorted(p) != list(range(g.n)):
        raise InvalidInvolution(f"{p} is not a permutation of 0..{g.n - 1}")
    if any(p[p[i]] != i for i in range(g.n)):
        raise InvalidInvolution(f"{p} does not square to the identity")
    for i in range(g.n):
        for j in range(g.n):
            if g.a[p[i]][p[j]] != g.a[i][j]:
                raise InvalidInvolution(
                    f"{p} is not label-preserving: a[{p[i]}][{p[j]}] != a[{i}][{j}]"
                )
    return DiagramInvolution(p)


def automorphisms(g: GeneralizedCartanMatrix) -> list[tuple[int, ...]]:
    """All diagram automorphisms of g, lexicographically ordered."""
    if g.n > MAX_AUTOMORPHISM_RANK:
        raise RankTooLarge(f"rank {g.n} exceeds automorphism search bound {MAX_AUTOMORPHISM_RANK}")
    return _iso.automorphisms(g.a)


@dataclass(frozen=True)
class InvolutionClass:
    """Conjugacy class of involutions; the representative is the lex-least."""

    representative: DiagramInvolution
    members: tuple[DiagramInvolution, ...]


def involutions(g: GeneralizedCartanMatrix) -> list[InvolutionClass]:
    """Order-<=2 automorphisms grouped into conjugacy classes under the full
    automorphism group."""
    auts = automorphisms(g)
    inverse = {p: tuple(sorted(range(g.n), key=lambda i: p[i])) for p in auts}
    invs = [p for p in auts if all(p[p[i]] == i for i in range(g.n))]
    remaining = set(invs)
    classes = []
    for p in invs:  # lex order, so reps come out lex-least
        if p not in remaining:
            continue
        cls = {tuple(q[p[inverse[q][i]]] for i in range(g.n)) for q in auts}
        remaining -= cls
        members = tuple(DiagramInvolution(m) for m in sorted(cls))
        classes.append(InvolutionClass(members[0], members))
    return classes


# ---------------------------------------------------------------------------
# Vogan diagrams

@dataclass(frozen=True)
class VoganDiagram:
    g: GeneralizedCartanMatrix
    sigma: DiagramInvolution
    painted: Painting

    def __post_init__(self):
        object.__setattr__(self, "painted", frozenset(self.painted))
        if len(self.sigma.perm) != self.g.n:
            raise InvalidInvolution("involution size does not match the matrix rank")
        for v in self.painted:
            if not 0 <= v < self.g.n:
                raise VertexNotFixed(f"painted vertex {v} is out of range")
            if self.sigma(v) != v:
                raise VertexNotFixed(
                    f"vertex {v} lies in a 2-element sigma-orbit and cannot be painted"
                )


def vogan_diagram(g, sigma=None, painted=()) -> VoganDiagram:
    if sigma is None:
        sigma = identity_involution(g)
    return VoganDiagram(g, sigma, frozenset(painted))


def f_move(v: VoganDiagram, i: int) -> VoganDiagram:
    """F[i]: i stays painted; every other fixed j with a[i][j] odd flips."""
    if not 0 <= i < v.g.n or v.sigma(i) != i:
        raise VertexNotFixed(f"F-move vertex {i} is not a sigma-fixed vertex")
    if i not in v.painted:
        raise UnpaintedVertex(f"F-move needs a painted vertex, {i} is unpainted")
    flips = {
        j
        for j in v.sigma.fixed()
        if j != i and v.g.a[i][j] % 2 != 0
    }
    return VoganDiagram(v.g, v.sigma, v.painted ^ flips)


def apply_automorphism(v: VoganDiagram, perm: Sequence[int]) -> VoganDiagram:
    """Relabel the painting by an automorphism commuting with sigma."""
    return VoganDiagram(v.g, v.sigma, frozenset(perm[x] for x in v.painted))


# ---------------------------------------------------------------------------
# orbits

def _commuting_automorphisms(g, sigma) -> list[tuple[int, ...]]:
    return [
        p
        for p in automorphisms(g)
        if all(p[sigma(i)] == sigma(p[i]) for i in range(g.n))
    ]


class _MoveSpace:
    """Compact bit encoding of paintings over the sigma-fixed vertices."""

    def __init__(self, g: GeneralizedCartanMatrix, sigma: DiagramInvolution):
        self.g = g
        self.sigma = sigma
        self.fixed = sigma.fixed()
        self.k = len(self.fixed)
        self.bit_of = {v: t for t, v in enumerate(self.fixed)}
        self.flips = [
            sum(
                1 << self.bit_of[j]
                for j in self.fixed
                if j != i and g.a[i][j] % 2 != 0
            )
            for i in self.fixed
        ]
        auts = _commuting_automorphisms(g, sigma)
        self.nontrivial_auts = [p for p in auts if any(p[i] != i for i in range(g.n))]
        # restriction of each automorphism to the fixed set, as a bit map
        self.perm_bits = [
            tuple(self.bit_of[p[v]] for v in self.fixed) for p in self.nontrivial_auts
        ]

    def mask_of(self, painting: Iterable[int]) -> int:
        return sum(1 << self.bit_of[v] for v in painting)

    def painting_of(self, mask: int) -> Painting:
        return frozenset(self.fixed[t] for t in range(self.k) if mask >> t & 1)


def orbit(v: VoganDiagram) -> frozenset[Painting]:
    """Closure of v's painting under F-moves and commuting automorphisms."""
    space = _MoveSpace(v.g, v.sigma)
    masks = kernels.closure(
        space.k, space.mask_of(v.painted), space.flips, space.perm_bits
    )
    return frozenset(space.painting_of(m) for m in masks)


# ---------------------------------------------------------------------------
# full partitions and reports

@dataclass(frozen=True)
class OrbitClass:
    members: tuple[tuple[int, ...], ...]       # canonical paintings, sorted
    minimal_reps: tuple[tuple[int, ...], ...]  # minimum-cardinality members
    bds_witness: Optional[tuple[int, ...]]     # a <=1-painted member, if any

    @property
    def representative(self) -> tuple[int, ...]:
        return self.minimal_reps[0]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Claim:
    """One claimed equivalence class of paintings, with its source quote."""

    quote: str
    paintings: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ClaimVerdict:
    claim: Claim
    verdict: str  # "Match" | "Mismatch"
    detail: str


@dataclass(frozen=True)
class OrbitReport:
    diagram_name: str
    sigma: tuple[int, ...]
    fixed_vertices: tuple[int, ...]
    classes: tuple[OrbitClass, ...]
    bds_holds: bool
    bds_counterexamples: tuple[int, ...]  # indices into classes
    verdicts: tuple[ClaimVerdict, ...] = field(default=())
    labels: Optional[tuple[str, ...]] = None

    def label_of(self, vertex: int) -> str:
        return self.labels[vertex] if self.labels else str(vertex)

    def format_painting(self, painting: Iterable[int]) -> str:
        return "(" + ",".join(self.label_of(v) for v in canon(painting)) + ")"

    def to_json_dict(self) -> dict:
        return {
            "diagram": self.diagram_name,
            "sigma": list(self.sigma),
            "fixed_vertices": list(self.fixed_vertices),
            "class_count": len(self.classes),
            "classes": [
                {
                    "size": c.size,
                    "minimal_representatives": [list(p) for p in c.minimal_reps],
                    "bds_witness": list(c.bds_witness) if c.bds_witness is not None else None,
                    "members": [list(p) for p in c.members],
                }
                for c in self.classes
            ],
            "borel_de_siebenthal": {
                "holds": self.bds_holds,
                "counterexample_classes": list(self.bds_counterexamples),
            },
            "paper_comparison": [
                {
                    "quote": v.claim.quote,
                    "paintings": [list(p) for p in v.claim.paintings],
                    "verdict": v.verdict,
                    "detail": v.detail,
                }
                for v in self.verdicts
            ],
        }


def _orbit_classes(space: _MoveSpace) -> list[OrbitClass]:
    if space.k > MAX_FIXED_VERTICES:
        raise TooManyFixedVertices(
            f"{space.k} fixed vertices exceed the exhaustive bound {MAX_FIXED_VERTICES}"
        )
    ids = kernels.partition_all(space.k, space.flips, space.perm_bits)
    groups: dict[int, list[int]] = {}
    for mask, cid in enumerate(ids):
        groups.setdefault(cid, []).append(mask)
    classes = []
    for cid in sorted(groups):
        members = sorted((canon(space.painting_of(m)) for m in groups[cid]),
                         key=lambda p: (len(p), p))
        low = len(members[0])
        minimal = tuple(p for p in members if len(p) == low)
        witness = next((p for p in members if len(p) <= 1), None)
        classes.append(OrbitClass(tuple(members), minimal, witness))
    classes.sort(key=lambda c: (len(c.representative), c.representative))
    return classes


def _claim_verdicts(classes, claims: Sequence[Claim], fmt) -> tuple[ClaimVerdict, ...]:
    class_of: dict[tuple[int, ...], int] = {}
    for idx, c in enumerate(classes):
        for p in c.members:
            class_of[p] = idx
    verdicts = []
    seen_orbits: list[set[int]] = []
    for claim in claims:
        unpaintable = [p for p in claim.paintings if p not in class_of]
        if unpaintable:
            detail = ("not paintable under this involution: "
                      + " ".join(fmt(p) for p in unpaintable))
            seen_orbits.append(set())
            verdicts.append(ClaimVerdict(claim, "Mismatch", detail))
            continue
        hits = {}
        for p in claim.paintings:
            hits.setdefault(class_of[p], []).append(p)
        orbits = set(hits)
        problems = []
        if len(orbits) > 1:
            parts = "; ".join(
                f"class {cid}: " + " ".join(fmt(p) for p in ps)
                for cid, ps in sorted(hits.items())
            )
            problems.append(f"paintings span {len(orbits)} computed orbits ({parts})")
        for earlier, eorbs in enumerate(seen_orbits):
            if orbits & eorbs:
                problems.append(
                    f"not distinct from claim {earlier} (shared computed class"
                    f" {sorted(orbits & eorbs)})"
                )
        seen_orbits.append(orbits)
        if problems:
            verdicts.append(ClaimVerdict(claim, "Mismatch", "; ".join(problems)))
        else:
            only = next(iter(orbits))
            verdicts.append(ClaimVerdict(claim, "Match", f"all in computed class {only}"))
    return tuple(verdicts)


def all_classes(
    g: GeneralizedCartanMatrix,
    sigma: Optional[DiagramInvolution] = None,
    name: Optional[str] = None,
    expectations: Sequence[Claim] = (),
    labels: Optional[Sequence[str]] = None,
) -> OrbitReport:
    """Partition every painting of Fix(sigma) into equivalence classes."""
    if sigma is None:
        sigma = identity_involution(g)
    space = _MoveSpace(g, sigma)
    classes = _orbit_classes(space)
    counter = tuple(
        idx
        for idx, c in enumerate(classes)
        if c.members != ((),) and c.bds_witness is None
    )
    label_list = tuple(labels) if labels else None

    def fmt(p):
        names = (label_list[v] for v in p) if label_list else map(str, p)
        return "(" + ",".join(names) + ")"

    return OrbitReport(
        diagram_name=name or g.name or f"rank-{g.n}",
        sigma=sigma.perm,
        fixed_vertices=space.fixed,
        classes=tuple(classes),
        bds_holds=not counter,
        bds_counterexamples=counter,
        verdicts=_claim_verdicts(classes, expectations, fmt),
        labels=label_list,
    )


@dataclass(frozen=True)
class BdsResult:
    holds: bool
    counterexamples: tuple[OrbitClass, ...]


def verify_borel_de_siebenthal(g, sigma=None) -> BdsResult:
    """Check that every nonempty-painting orbit has a <=1-painted member."""
    report = all_classes(g, sigma)
    bad = tuple(report.classes[i] for i in report.bds_counterexamples)
    return BdsResult(not bad, bad)


@dataclass(frozen=True)
class LemmaVerdict:
    first: tuple[int, ...]
    second: tuple[int, ...]
    same_orbit: bool


def verify_lemma_instances(
    g, sigma, instances: Sequence[tuple[Iterable[int], Iterable[int]]]
) -> list[LemmaVerdict]:
    """For each claimed-equivalent pair, report orbit co-membership."""
    if sigma is None:
        sigma = identity_involution(g)
    verdicts = []
    cache: dict[frozenset, frozenset] = {}
    for first, second in instances:
        p, q = frozenset(first), frozenset(second)
        if p not in cache:
            orb = orbit(vogan_diagram(g, sigma, p))
            for member in orb:
                cache[member] = orb
        verdicts.append(LemmaVerdict(canon(p), canon(q), q in cache[p]))
    return verdicts


# ---------------------------------------------------------------------------
# reduction with replayable traces

@dataclass(frozen=True)
class ReductionResult:
    representative: tuple[int, ...]
    trace: tuple[tuple, ...]  # ("F", vertex) and ("aut", perm) steps


def replay(v: VoganDiagram, trace: Sequence[tuple]) -> VoganDiagram:
    for step in trace:
        if step[0] == "F":
            v = f_move(v, step[1])
        elif step[0] == "aut":
            v = apply_automorphism(v, step[1])
        else:
            raise ValueError(f"unknown trace step {step!r}")
    return v


def reduce_to_minimal(v: VoganDiagram) -> ReductionResult:
    """Minimum-cardinality representative of v's orbit plus a move trace.

    Ties among minimum-cardinality members break to the lexicographically
    smallest sorted vertex list.  The returned trace is replayed before
    returning, so it provably lands on the representative.
    """
    space = _MoveSpace(v.g, v.sigma)
    start = space.mask_of(v.painted)
    parent: dict[int, Optional[tuple]] = {start: None}
    queue = [start]
    while queue:
        nxt = []
        for m in queue:
            for t in range(space.k):
                if m >> t & 1:
                    c = m ^ space.flips[t]
                    if c not in parent:
                        parent[c] = (m, ("F", space.fixed[t]))
                        nxt.append(c)
            for p, bits in zip(space.nontrivial_auts, space.perm_bits):
                c = 0
                for t in range(space.k):
                    if m >> t & 1:
                        c |= 1 << bits[t]
                if c not in parent:
                    parent[c] = (m, ("aut", p))
                    nxt.append(c)
        queue = nxt
    target = min(parent, key=lambda m: _painting_key(space.painting_of(m)))
    steps = []
    cur = target
    while parent[cur] is not None:
        prev, step = parent[cur]
        steps.append(step)
        cur = prev
    steps.reverse()
    result = ReductionResult(canon(space.painting_of(target)), tuple(steps))
    check = replay(v, result.trace)
    if canon(check.painted) != result.representative:
        raise AssertionError("trace replay did not reproduce the representative")
    return result
