"""Finite abstract simplicial complexes with exact face calculus.

A complex is stored by its facets (inclusion-maximal faces); every other
face is implied by downward closure.  Vertices carry arbitrary nonnegative
integer labels externally and are packed into bitmask positions internally,
so subset tests are single integer operations.  The void complex (no faces
at all) and the empty complex (only the empty face) are distinct values.

All operations are deterministic: faces are ordered by (cardinality, label
tuple) and every reported witness is the first one in that order.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import ClassificationError, InputError, ResourceLimitError

Face = tuple[int, ...]

# Cap on candidate sets examined while searching for minimal nonfaces.
DEFAULT_CANDIDATE_CAP = 1 << 22


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no classification with a witness for the "no" side.

    ``witness`` is a JSON-friendly object (face, pair, dict) describing the
    first counterexample in deterministic order; empty when ``ok``.
    """

    ok: bool
    witness: object = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}); f_{-1} counts the empty face."""

    counts: tuple[int, ...]

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)


@dataclass(frozen=True)
class HVector:
    """The h-vector (h_0, ..., h_d) obtained from the f-vector.

    The two encode the same data: sum_i h_i x^i equals
    sum_i f_{i-1} x^i (1-x)^(d-i), expanded over the integers.
    """

    counts: tuple[int, ...]

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    @property
    def reduced_euler_characteristic(self) -> int:
        """Signed top entry: chi~ = (-1)^(d-1) h_d."""
        d = len(self.counts) - 1
        sign = 1 if (d - 1) % 2 == 0 else -1
        return sign * self.counts[d]


@dataclass(frozen=True)
class StrongComponents:
    """Partition of the facets into strong components, plus a purity flag.

    Two facets are in one component when they are joined by a chain of
    facets in which consecutive entries share a face of codimension one in
    both.  Only equal-dimension facets can ever be chained, so a complex
    with a single component is necessarily pure.
    """

    components: tuple[tuple[Face, ...], ...]
    pure: bool

    @property
    def count(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class BoundRow:
    index: int
    count: int
    bound: int
    ok: bool


@dataclass(frozen=True)
class FaceBoundsReport:
    """Per-dimension comparison of face counts against 2^i * C(d, i)."""

    rows: tuple[BoundRow, ...]
    ok: bool


def _validate_face(face: Iterable[int]) -> Face:
    out = []
    for v in face:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"vertex label {v!r} is not an integer")
        if v < 0:
            raise InputError(f"vertex label {v} is negative")
        out.append(v)
    if len(set(out)) != len(out):
        raise InputError(f"face {sorted(out)} repeats a vertex")
    return tuple(sorted(out))


class SimplicialComplex:
    """Immutable simplicial complex defined by a collection of faces.

    The constructor accepts any collection of faces, keeps the maximal
    ones, and treats everything below them as present.  Pass an empty
    collection for the void complex and ``[[]]`` for the empty complex.
    """

    __slots__ = (
        "_labels",
        "_pos",
        "_facet_masks",
        "_void",
        "_lock",
        "_face_cache",
        "_sub_cache",
        "_aux",
        "_flag_verdict",
        "_pm_verdict",
        "_strong",
        "_nonfaces",
    )

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        faces = [_validate_face(f) for f in facets]
        self._void = not faces
        labels = sorted({v for f in faces for v in f})
        self._labels: tuple[int, ...] = tuple(labels)
        self._pos = {v: i for i, v in enumerate(labels)}
        masks = sorted({self._mask_unchecked(f) for f in faces}, key=int.bit_count)
        maximal: list[int] = []
        # scan from large to small; smaller faces are absorbed by larger ones
        for m in reversed(masks):
            if not any(m & big == m for big in maximal):
                maximal.append(m)
        maximal.sort(key=self._face_key)
        self._facet_masks: tuple[int, ...] = tuple(maximal)
        self._lock = threading.Lock()
        self._face_cache: dict[int, tuple[int, ...]] = {}
        self._sub_cache: dict[tuple[str, int], "SimplicialComplex"] = {}
        self._aux: dict = {}
        self._flag_verdict: Verdict | None = None
        self._pm_verdict: Verdict | None = None
        self._strong: StrongComponents | None = None
        self._nonfaces: tuple[Face, ...] | None = None

    # -- representation helpers -------------------------------------------

    def _mask_unchecked(self, face: Face) -> int:
        m = 0
        for v in face:
            m |= 1 << self._pos[v]
        return m

    def _mask_of(self, face: Iterable[int]) -> int | None:
        """Bitmask for a validated face, or None if a label is unknown."""
        m = 0
        for v in face:
            i = self._pos.get(v)
            if i is None:
                return None
            m |= 1 << i
        return m

    def _labels_of(self, mask: int) -> Face:
        out = []
        while mask:
            low = mask & -mask
            out.append(self._labels[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    def _face_key(self, mask: int):
        return self._labels_of(mask)

    # -- basic queries ------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return self._void

    @property
    def is_empty_complex(self) -> bool:
        """True when the only face is the empty face."""
        return self._facet_masks == (0,)

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for both the empty and void complexes."""
        if self._void:
            return -1
        return max(m.bit_count() for m in self._facet_masks) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._labels

    @property
    def num_vertices(self) -> int:
        return len(self._labels)

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(self._labels_of(m) for m in self._facet_masks)

    @property
    def is_pure(self) -> bool:
        """All facets share one dimension (vacuously true without facets)."""
        if self._void:
            return True
        sizes = {m.bit_count() for m in self._facet_masks}
        return len(sizes) <= 1

    def has_face(self, face: Iterable[int]) -> bool:
        m = self._mask_of(_validate_face(face))
        if m is None:
            return False
        return any(m & f == m for f in self._facet_masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._void == other._void and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash((self._void, frozenset(self.facets)))

    def __repr__(self) -> str:
        if self._void:
            return "SimplicialComplex(void)"
        return (
            f"SimplicialComplex(dim={self.dimension}, "
            f"vertices={self.num_vertices}, facets={len(self._facet_masks)})"
        )

    # -- face enumeration ----------------------------------------------------

    def _faces_masks(self, k: int) -> tuple[int, ...]:
        if self._void or k < -1 or k > self.dimension:
            return ()
        if k == -1:
            return (0,)
        with self._lock:
            cached = self._face_cache.get(k)
        if cached is not None:
            return cached
        size = k + 1
        seen: set[int] = set()
        for fm in self._facet_masks:
            bits = []
            m = fm
            while m:
                low = m & -m
                bits.append(low)
                m ^= low
            if len(bits) < size:
                continue
            if len(bits) == size:
                seen.add(fm)
                continue
            for combo in combinations(bits, size):
                sub = 0
                for b in combo:
                    sub |= b
                seen.add(sub)
        out = tuple(sorted(seen, key=self._face_key))
        with self._lock:
            self._face_cache[k] = out
        return out

    def faces(self, k: int) -> tuple[Face, ...]:
        """All faces of dimension k, ordered by label tuple.

        Out-of-range k yields an empty tuple; k = -1 yields the empty face
        for any non-void complex.
        """
        return tuple(self._labels_of(m) for m in self._faces_masks(k))

    def num_faces(self, k: int) -> int:
        return len(self._faces_masks(k))

    def all_faces(self) -> Iterator[Face]:
        """Every face including the empty one, by (dimension, label tuple)."""
        for k in range(-1, self.dimension + 1):
            yield from self.faces(k)

    # -- f- and h-vectors ------------------------------------------------------

    def f_vector(self) -> FVector:
        if self._void:
            raise InputError("the void complex has no f-vector")
        return FVector(tuple(self.num_faces(k) for k in range(-1, self.dimension + 1)))

    def h_vector(self) -> HVector:
        """Integer h-vector; refuses the void complex like f_vector."""
        f = self.f_vector().counts
        d = self.dimension + 1
        counts = []
        for j in range(d + 1):
            acc = 0
            for i in range(j + 1):
                term = comb(d - i, j - i) * f[i]
                acc += term if (j - i) % 2 == 0 else -term
            counts.append(acc)
        return HVector(tuple(counts))

    def reduced_euler_characteristic(self) -> int:
        f = self.f_vector().counts
        return sum(c if i % 2 == 1 else -c for i, c in enumerate(f))

    # -- derived complexes ---------------------------------------------------

    def _cached_sub(self, kind: str, mask: int, build) -> "SimplicialComplex":
        key = (kind, mask)
        with self._lock:
            hit = self._sub_cache.get(key)
        if hit is not None:
            return hit
        built = build()
        with self._lock:
            return self._sub_cache.setdefault(key, built)

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces that extend the given one, with the face itself stripped."""
        f = _validate_face(face)
        m = self._mask_of(f)
        if m is None or not any(m & fm == m for fm in self._facet_masks):
            raise InputError(f"{list(f)} is not a face of this complex")
        if m == 0:
            return self

        def build():
            kept = [self._labels_of(fm & ~m) for fm in self._facet_masks if fm & m == m]
            return SimplicialComplex(kept)

        return self._cached_sub("link", m, build)

    def delete(self, points: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex of faces disjoint from the given vertex set.

        Labels that are not vertices of the complex are ignored.
        """
        pts = set(points)
        for v in pts:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InputError(f"vertex label {v!r} is not a nonnegative integer")
        m = 0
        for v in pts:
            i = self._pos.get(v)
            if i is not None:
                m |= 1 << i
        if m == 0:
            return self

        def build():
            return SimplicialComplex([self._labels_of(fm & ~m) for fm in self._facet_masks])

        return self._cached_sub("delete", m, build)

    def closed_star(self, vertex: int) -> "SimplicialComplex":
        """Subcomplex generated by the facets containing the vertex."""
        i = self._pos.get(vertex)
        if i is None:
            raise InputError(f"{vertex!r} is not a vertex of this complex")
        m = 1 << i

        def build():
            return SimplicialComplex(
                [self._labels_of(fm) for fm in self._facet_masks if fm & m]
            )

        return self._cached_sub("star", m, build)

    def skeleton(self, k: int) -> "SimplicialComplex":
        """Subcomplex of all faces of dimension at most k."""
        if self._void or k >= self.dimension:
            return self
        if k < -1:
            raise InputError("skeleton dimension below -1 makes no sense")
        top = [self._labels_of(m) for m in self._faces_masks(k)]
        low = [
            self._labels_of(m) for m in self._facet_masks if m.bit_count() <= k
        ]
        return SimplicialComplex(top + low)

    # -- minimal nonfaces and flagness ---------------------------------------

    def _iter_minimal_nonfaces(self, cap: int) -> Iterator[Face]:
        """Yield minimal nonfaces by (cardinality, label tuple).

        A candidate at level c is a c-set whose proper subsets are all
        faces; it is generated by extending a (c-1)-face past its largest
        label, so each candidate appears exactly once.  Levels beyond
        dimension + 2 cannot carry minimal nonfaces and are not visited.
        """
        if self._void:
            return
        examined = 0
        n = len(self._labels)
        for c in range(2, self.dimension + 3):
            lower = self._faces_masks(c - 2)
            if not lower:
                return
            lower_set = set(lower)
            level: list[Face] = []
            for tm in lower:
                top_bit = tm.bit_length()  # positions strictly above the max label
                for i in range(top_bit, n):
                    sm = tm | (1 << i)
                    examined += 1
                    if examined > cap:
                        raise ResourceLimitError(
                            f"minimal nonface search exceeded {cap} candidate sets"
                        )
                    if all(
                        (sm & ~b) in lower_set
                        for b in self._bits(sm)
                        if b != (1 << i)
                    ):
                        if not any(sm & fm == sm for fm in self._facet_masks):
                            level.append(self._labels_of(sm))
            yield from sorted(level)

    @staticmethod
    def _bits(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low)
            mask ^= low
        return out

    def minimal_nonfaces(self, cap: int = DEFAULT_CANDIDATE_CAP) -> tuple[Face, ...]:
        """All minimal nonfaces, ordered by (cardinality, label tuple)."""
        if self._nonfaces is not None:
            return self._nonfaces
        out = tuple(self._iter_minimal_nonfaces(cap))
        with self._lock:
            if self._nonfaces is None:
                self._nonfaces = out
        return out

    def is_flag(self, cap: int = DEFAULT_CANDIDATE_CAP) -> Verdict:
        """Whether every minimal nonface has at most two vertices.

        Equivalently the complex is the clique complex of its own graph.
        The witness on failure is the first minimal nonface with three or
        more vertices.
        """
        if self._flag_verdict is not None:
            return self._flag_verdict
        verdict = Verdict(True)
        for nf in self._iter_minimal_nonfaces(cap):
            if len(nf) >= 3:
                verdict = Verdict(
                    False, witness=nf, reason="minimal nonface with 3 or more vertices"
                )
                break
        with self._lock:
            if self._flag_verdict is None:
                self._flag_verdict = verdict
        return verdict

    # -- strong components and pseudomanifolds --------------------------------

    def strong_components(self) -> StrongComponents:
        """Group facets by chains of codimension-one (in both) overlaps."""
        if self._strong is not None:
            return self._strong
        masks = self._facet_masks
        parent = list(range(len(masks)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(len(masks)):
            ci = masks[i].bit_count()
            for j in range(i + 1, len(masks)):
                if masks[j].bit_count() != ci:
                    continue
                if (masks[i] & masks[j]).bit_count() == ci - 1:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        groups: dict[int, list[Face]] = {}
        for i, m in enumerate(masks):
            groups.setdefault(find(i), []).append(self._labels_of(m))
        comps = tuple(
            tuple(sorted(g, key=lambda f: (len(f), f)))
            for g in sorted(groups.values(), key=lambda g: (len(min(g)), min(g)))
        )
        result = StrongComponents(components=comps, pure=self.is_pure)
        with self._lock:
            if self._strong is None:
                self._strong = result
        return result

    def is_pseudomanifold(self) -> Verdict:
        """Strongly connected and every codimension-two face in two facets.

        Defined here for any dimension >= 0; at dimension 0 the codimension
        two face is the empty face, so the test asks for exactly two
        vertices.  The void and empty complexes are rejected outright.
        """
        if self._pm_verdict is not None:
            return self._pm_verdict
        verdict = self._compute_pm()
        with self._lock:
            if self._pm_verdict is None:
                self._pm_verdict = verdict
        return verdict

    def _compute_pm(self) -> Verdict:
        if self.dimension < 0:
            return Verdict(False, reason="void or empty complex")
        sc = self.strong_components()
        if sc.count != 1:
            return Verdict(
                False,
                witness={"strong_components": sc.count},
                reason="not strongly connected",
            )
        ridge_count: dict[int, int] = {}
        for fm in self._facet_masks:
            for b in self._bits(fm):
                ridge_count[fm & ~b] = ridge_count.get(fm & ~b, 0) + 1
        for rm in sorted(ridge_count, key=self._face_key):
            if ridge_count[rm] != 2:
                return Verdict(
                    False,
                    witness={
                        "ridge": self._labels_of(rm),
                        "facet_count": ridge_count[rm],
                    },
                    reason="a codimension-two face is not in exactly two facets",
                )
        return Verdict(True)


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from a collection of faces (maximal ones are kept)."""
    return SimplicialComplex(facets)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint ground sets: pairwise facet unions."""
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        raise InputError(f"ground sets overlap on {sorted(overlap)}")
    return SimplicialComplex([fa + fb for fa in a.facets for fb in b.facets])


def check_face_lower_bounds(cx: SimplicialComplex, cap: int = DEFAULT_CANDIDATE_CAP) -> FaceBoundsReport:
    """Compare each face count f_{i-1} with 2^i * C(d, i).

    Requires a flag pseudomanifold; a failed membership check raises
    ClassificationError naming the check instead of producing a report.
    """
    flag = cx.is_flag(cap)
    if not flag:
        raise ClassificationError("flag", witness=flag.witness)
    pm = cx.is_pseudomanifold()
    if not pm:
        raise ClassificationError("pseudomanifold", witness=pm.witness)
    d = cx.dimension + 1
    f = cx.f_vector().counts
    rows = []
    for i in range(d + 1):
        bound = (1 << i) * comb(d, i)
        rows.append(BoundRow(index=i, count=f[i], bound=bound, ok=f[i] >= bound))
    return FaceBoundsReport(rows=tuple(rows), ok=all(r.ok for r in rows))
