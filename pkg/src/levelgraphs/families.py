"""Layered graph families grown from a cycle or a clique.

Each family starts from an l-gon (family G, R) or from the complete graph
K_l drawn on an l-gon (family K, P) and grows inward: every step places a
new vertex on each edge of the innermost ring and joins the new vertices
into a ring of their own.  Splitting an edge destroys it, so after n steps
the graph consists of n concentric levels of l vertices each, where level 1
is the original outermost ring and level n the innermost, and only the
innermost ring survives as actual cycle edges.  Chord edges of a clique
basis are never split and persist on every level.

Families R and P additionally close the outermost ring again, which makes
R 4-regular and P (l+1)-regular.

For R, K and P the construction prose and the level-vector counting
algorithm do not describe the same edge set once n grows.  Both readings
are built here, selected by EdgeInterpretation: LITERAL is the edge set the
construction prose produces, ALGORITHM is the edge set whose independent
sets the level-vector recurrences actually count (rings or cliques closed
on every level).  For family G the two coincide.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations


class Family(str, Enum):
    G = "g"  # nested rings, only the innermost ring closed
    R = "r"  # nested rings, outermost and innermost rings closed
    K = "k"  # clique basis, chords on every level
    P = "p"  # clique basis with the outermost ring closed

    def __str__(self) -> str:
        return self.value


class EdgeInterpretation(str, Enum):
    LITERAL = "literal"
    ALGORITHM = "algorithm"

    def __str__(self) -> str:
        return self.value


class ResourceLimitError(ValueError):
    """A requested instance exceeds the documented size caps."""


# Collection sizes are 2^l for G/K but only L_l (Lucas) resp. l+1 for R/P,
# hence the asymmetric caps.
_ELL_CAP = {Family.G: 16, Family.K: 16, Family.R: 24, Family.P: 24}

LevelVector = tuple  # 0/1 entries, index 0 is v1; cyclic: index l wraps to 0


@dataclass(frozen=True)
class FamilySpec:
    """One problem instance: family, ring size l, number of levels n."""

    family: Family
    ell: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.ell < 3:
            raise ValueError(f"ell must be >= 3, got {self.ell}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")


def _check_ell(family: Family, ell: int) -> None:
    if ell < 3:
        raise ValueError(f"ell must be >= 3, got {ell}")
    cap = _ELL_CAP[family]
    if ell > cap:
        raise ResourceLimitError(
            f"ell={ell} exceeds the cap {cap} for family {family.value}"
        )


def _vector_from_int(value: int, ell: int) -> LevelVector:
    # v1 is the most significant bit
    return tuple((value >> (ell - 1 - i)) & 1 for i in range(ell))


def _no_cyclic_adjacent_ones(ell: int) -> list[LevelVector]:
    # Generated most-significant-bit first with the 0 branch before the 1
    # branch, so the output is already in ascending binary order.
    out: list[LevelVector] = []
    bits = [0] * ell

    def extend(i: int) -> None:
        if i == ell:
            if not (bits[0] == 1 and bits[ell - 1] == 1):
                out.append(tuple(bits))
            return
        bits[i] = 0
        extend(i + 1)
        if i == 0 or bits[i - 1] == 0:
            bits[i] = 1
            extend(i + 1)
            bits[i] = 0

    extend(0)
    return out


def level_vectors(family: Family, ell: int) -> list[LevelVector]:
    """The ordered collection of admissible level vectors for a family.

    G and K admit every 0/1 vector of length l.  R admits only vectors
    without two cyclically consecutive ones, P only the zero vector and the
    l unit vectors.  Ordering is ascending by the integer whose binary
    digits are (v1 .. vl) with v1 most significant, so the zero vector is
    always first.
    """
    family = Family(family)
    _check_ell(family, ell)
    if family in (Family.G, Family.K):
        return [_vector_from_int(v, ell) for v in range(1 << ell)]
    if family is Family.R:
        return _no_cyclic_adjacent_ones(ell)
    # family P: zero vector plus unit vectors, ascending binary value
    values = [0] + [1 << j for j in range(ell)]
    return [_vector_from_int(v, ell) for v in values]


def compatible(v: LevelVector, w: LevelVector) -> bool:
    """May level vector w sit directly inside level vector v?

    True iff for every position i, either v has zeros at i and i+1
    (cyclically) or w has a zero at i.  v is the outer level, w the inner
    one; vertex i of the inner level touches vertices i and i+1 of the
    outer level.
    """
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    ell = len(v)
    for i in range(ell):
        if w[i] and (v[i] or v[(i + 1) % ell]):
            return False
    return True


def acceptance(family: Family, ell: int) -> tuple[int, ...]:
    """Indicator of which level vectors may occupy the innermost level.

    Indexed by level_vectors(family, ell).  The innermost level of G keeps
    its ring edges, so no two cyclically consecutive ones are allowed; the
    innermost level of K is a clique, so at most one entry may be set.  The
    collections of R and P already encode their innermost constraint, so
    their acceptance vectors are all ones.
    """
    family = Family(family)
    vectors = level_vectors(family, ell)
    if family in (Family.R, Family.P):
        return tuple(1 for _ in vectors)
    if family is Family.G:
        def ok(v: LevelVector) -> bool:
            return all(not (v[i] and v[(i + 1) % ell]) for i in range(ell))
    else:  # K: at most one vertex of a clique
        def ok(v: LevelVector) -> bool:
            return sum(v) <= 1
    return tuple(1 if ok(v) else 0 for v in vectors)


@dataclass(frozen=True)
class ExplicitGraph:
    """A concrete graph with vertex ids (level-1)*ell + position."""

    ell: int
    levels: int
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for lst in nbrs:
            lst.sort()
        return nbrs


def _vid(ell: int, level: int, pos: int) -> int:
    return (level - 1) * ell + pos % ell


def _ring(ell: int, level: int) -> list[tuple[int, int]]:
    return [(_vid(ell, level, i), _vid(ell, level, i + 1)) for i in range(ell)]


def _chords(ell: int, level: int) -> list[tuple[int, int]]:
    # the l(l-3)/2 clique edges that are not ring edges
    out = []
    for i, j in combinations(range(ell), 2):
        if j - i not in (1, ell - 1):
            out.append((_vid(ell, level, i), _vid(ell, level, j)))
    return out


def build_graph(
    spec: FamilySpec,
    interp: EdgeInterpretation = EdgeInterpretation.LITERAL,
) -> ExplicitGraph:
    """Construct the explicit graph for a spec under one edge reading.

    Inter-level edges are the same for every family and both readings:
    vertex i of level k+1 is adjacent to vertices i and i+1 (mod l) of
    level k.  Intra-level edges vary:

      G             ring on level n only
      R literal     ring on levels 1 and n
      R algorithm   ring on every level
      K literal     ring on level n, chords on every level
      K algorithm   clique on level n only
      P literal     K literal plus the ring on level 1
      P algorithm   clique on every level

    Parallel edges collapse; they never change independent sets.
    """
    interp = EdgeInterpretation(interp)
    ell, n, family = spec.ell, spec.n, spec.family
    pairs: set[tuple[int, int]] = set()

    def add(edge_list: list[tuple[int, int]]) -> None:
        for a, b in edge_list:
            pairs.add((a, b) if a < b else (b, a))

    for k in range(1, n):
        for i in range(ell):
            add([(_vid(ell, k + 1, i), _vid(ell, k, i))])
            add([(_vid(ell, k + 1, i), _vid(ell, k, i + 1))])

    if n >= 1:
        if family is Family.G:
            add(_ring(ell, n))
        elif family is Family.R:
            if interp is EdgeInterpretation.LITERAL:
                add(_ring(ell, n))
                add(_ring(ell, 1))
            else:
                for k in range(1, n + 1):
                    add(_ring(ell, k))
        elif family is Family.K:
            add(_ring(ell, n))
            if interp is EdgeInterpretation.LITERAL:
                for k in range(1, n + 1):
                    add(_chords(ell, k))
            else:
                add(_chords(ell, n))
        else:  # Family.P
            add(_ring(ell, n))
            if interp is EdgeInterpretation.LITERAL:
                for k in range(1, n + 1):
                    add(_chords(ell, k))
                add(_ring(ell, 1))
            else:
                for k in range(1, n + 1):
                    add(_ring(ell, k))
                    add(_chords(ell, k))

    return ExplicitGraph(
        ell=ell,
        levels=n,
        vertex_count=ell * n,
        edges=tuple(sorted(pairs)),
    )


def degree_profile(g: ExplicitGraph) -> dict[int, int]:
    """Histogram mapping degree to the number of vertices of that degree."""
    deg = [0] * g.vertex_count
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    return dict(Counter(deg))


def to_dot(g: ExplicitGraph, name: str = "g") -> str:
    """Render as Graphviz DOT, one vertex per node labeled "level:position"."""
    def tag(v: int) -> str:
        return f"\"{v // g.ell + 1}:{v % g.ell}\""

    lines = [f"graph \"{name}\" {{"]
    for v in range(g.vertex_count):
        lines.append(f"  {tag(v)};")
    for a, b in g.edges:
        lines.append(f"  {tag(a)} -- {tag(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
