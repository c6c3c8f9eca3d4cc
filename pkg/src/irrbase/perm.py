"""Permutations on finite indexed domains and a deterministic Schreier-Sims
stabilizer chain.

Conventions
-----------
* Right action throughout: ``compose(p, q)`` acts as "p then q", so that
  ``x^(pq) = (x^p)^q``.  With dense image arrays this is
  ``(p*q).image == q.image[p.image]``.
* A :class:`Domain` owns the point labels; permutations are dense int32
  image arrays over ``0..size-1``.  Permutations and finished groups are
  immutable and safe to share between threads.
* Transversals are stored as Schreier vectors (arrays of directed edge
  codes, no per-point elements); coset representatives are reconstructed
  on demand.  Trees are kept shallow by adding extra tree generators when
  a point's depth exceeds twice the current tree size.
* Base points are chosen as the smallest moved point, except where a base
  prefix is prescribed (pointwise stabilizers, chain reports).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class DomainMismatchError(ValueError):
    """Raised when permutations over different domains are combined."""


class Domain:
    """An indexed set of distinct, hashable point labels."""

    __slots__ = ("size", "labels", "_index", "_arange")

    def __init__(self, labels: Sequence):
        self.labels = tuple(labels)
        self.size = len(self.labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != self.size:
            raise ValueError("domain labels must be pairwise distinct")
        self._arange = np.arange(self.size, dtype=np.int32)
        self._arange.setflags(write=False)

    def index_of(self, label) -> int:
        return self._index[label]

    def label_of(self, i: int):
        return self.labels[i]

    def identity(self) -> "Permutation":
        return Permutation(self, self._arange, _validate=False)

    def perm(self, image: Sequence[int]) -> "Permutation":
        return Permutation(self, np.asarray(image, dtype=np.int32))

    def perm_from_cycles(self, *cycles: Sequence[int]) -> "Permutation":
        img = np.array(self._arange)
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                img[a] = b
            if cyc:
                img[cyc[-1]] = cyc[0]
        return Permutation(self, img)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Domain(size={self.size})"


def integers(n: int) -> Domain:
    """The domain 0..n-1 with integer labels."""
    return Domain(range(n))


class Permutation:
    """A bijection of a domain, stored as a dense image array."""

    __slots__ = ("domain", "image", "_hash", "_inv")

    def __init__(self, domain: Domain, image: np.ndarray, _validate: bool = True):
        image = np.asarray(image, dtype=np.int32)
        if _validate:
            if image.shape != (domain.size,):
                raise ValueError("image length does not match domain size")
            seen = np.zeros(domain.size, dtype=bool)
            seen[image] = True
            if not seen.all():
                raise ValueError("image is not a bijection")
            image = image.copy()
            image.setflags(write=False)
        self.domain = domain
        self.image = image
        self._hash = None
        self._inv = None

    def __call__(self, i: int) -> int:
        return int(self.image[i])

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self then other (right action)."""
        if other.domain is not self.domain:
            raise DomainMismatchError("permutations act on different domains")
        img = other.image[self.image]
        img.setflags(write=False)
        return Permutation(self.domain, img, _validate=False)

    def inverse(self) -> "Permutation":
        if self._inv is None:
            inv = np.empty(self.domain.size, dtype=np.int32)
            inv[self.image] = self.domain._arange
            inv.setflags(write=False)
            p = Permutation(self.domain, inv, _validate=False)
            p._inv = self
            self._inv = p
        return self._inv

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.domain.identity()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return bool((self.image == self.domain._arange).all())

    def moved_points(self) -> np.ndarray:
        return np.nonzero(self.image != self.domain._arange)[0]

    def smallest_moved_point(self) -> int | None:
        diff = self.image != self.domain._arange
        idx = int(np.argmax(diff))
        return idx if diff[idx] else None

    def cycles(self) -> list[tuple[int, ...]]:
        seen = np.zeros(self.domain.size, dtype=bool)
        out = []
        for i in range(self.domain.size):
            if seen[i] or self.image[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(self.image[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(self.image[j])
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Permutation)
            and other.domain is self.domain
            and bool(np.array_equal(self.image, other.image))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.image.tobytes())
        return self._hash

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "Permutation(id)"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc[:6])
        if len(cyc) > 6:
            body += "..."
        return f"Permutation{body}"


# --------------------------------------------------------------------------
# orbits with Schreier transversals
# --------------------------------------------------------------------------

class OrbitTransversal:
    """An orbit plus a Schreier vector for rebuilding coset representatives.

    ``points`` lists the orbit in BFS discovery order (root first); for each
    point ``transversal(p)`` returns an element u of the generated group with
    root^u = p.
    """

    __slots__ = ("domain", "root", "points", "_sv", "_edges")

    def __init__(self, domain, root, points, sv, edges):
        self.domain = domain
        self.root = root
        self.points = points
        self._sv = sv
        self._edges = edges

    def __contains__(self, point: int) -> bool:
        return self._sv[point] != -2

    def __len__(self) -> int:
        return len(self.points)

    def as_set(self) -> set[int]:
        return set(self.points)

    def _path_codes(self, point: int) -> list[int]:
        codes = []
        while point != self.root:
            code = int(self._sv[point])
            if code == -2:
                raise ValueError(f"point {point} is not in the orbit")
            codes.append(code)
            t, d = divmod(code, 2)
            point = int(self._edges[t][1 - d][point])
        codes.reverse()
        return codes

    def transversal(self, point: int) -> Permutation:
        img = np.array(self.domain._arange)
        for code in self._path_codes(point):
            t, d = divmod(code, 2)
            img = self._edges[t][d][img]
        img.setflags(write=False)
        return Permutation(self.domain, img, _validate=False)


def orbit(gens: Sequence[Permutation], point: int) -> OrbitTransversal:
    """Smallest set containing `point` closed under the generators, with a
    Schreier transversal."""
    if not gens:
        raise ValueError("orbit requires at least one generator (use the identity)")
    domain = gens[0].domain
    edges = [(g.image, g.inverse().image) for g in gens]
    sv = np.full(domain.size, -2, dtype=np.int64)
    sv[point] = -1
    points = [point]
    pos = 0
    while pos < len(points):
        a = points[pos]
        pos += 1
        for t, (img, inv) in enumerate(edges):
            for d, arr in ((0, img), (1, inv)):
                b = int(arr[a])
                if sv[b] == -2:
                    sv[b] = 2 * t + d
                    points.append(b)
    return OrbitTransversal(domain, point, points, sv, edges)


def orbit_partition(gens: Sequence[Permutation], n: int) -> list[list[int]]:
    """All orbits of the generated group, each sorted, ordered by minimum."""
    seen = np.zeros(n, dtype=bool)
    out = []
    images = [g.image for g in gens]
    for start in range(n):
        if seen[start]:
            continue
        block = [start]
        seen[start] = True
        pos = 0
        while pos < len(block):
            a = block[pos]
            pos += 1
            for img in images:
                b = int(img[a])
                if not seen[b]:
                    seen[b] = True
                    block.append(b)
        out.append(sorted(block))
    return out


# --------------------------------------------------------------------------
# Schreier-Sims stabilizer chain
# --------------------------------------------------------------------------

class _Level:
    """One level of a stabilizer chain.

    ``gens`` lists the strong generators fixing all earlier base points;
    ``edges`` holds directed image arrays for the Schreier tree (the per-gen
    pairs first, then extra tree elements added to keep the tree shallow);
    ``sv`` is the Schreier vector (-1 root, -2 outside orbit, otherwise
    ``2*t + d`` meaning the point was discovered applying ``edges[t][d]``).
    ``processed[k]`` counts orbit points whose Schreier generator with
    ``gens[k]`` has already been sifted; orbit order and generator lists only
    ever append, so the counters stay valid across resumed verification.
    """

    __slots__ = ("beta", "gens", "edges", "sv", "depth", "orbit", "processed")

    def __init__(self, beta: int, n: int):
        self.beta = beta
        self.gens: list[Permutation] = []
        self.edges: list[tuple[np.ndarray, np.ndarray]] = []
        self.sv = np.full(n, -2, dtype=np.int64)
        self.sv[beta] = -1
        self.depth = np.zeros(n, dtype=np.int32)
        self.orbit: list[int] = [beta]
        self.processed: list[int] = []


class StabChain:
    """Base, fundamental orbits and strong generators of a permutation group.

    Built by a deterministic Schreier-Sims run.  If ``target_order`` is the
    exact order of the generated group (for stabilizers it is known in
    advance from the orbit-stabilizer theorem), construction stops as soon
    as the product of fundamental orbit lengths reaches it; the partial
    product never exceeds the true order, so the early exit is sound.
    """

    __slots__ = ("domain", "levels")

    def __init__(self, domain: Domain, levels: list[_Level]):
        self.domain = domain
        self.levels = levels

    # -- construction -------------------------------------------------------

    @classmethod
    def build(
        cls,
        domain: Domain,
        gens: Sequence[Permutation],
        base_prefix: Sequence[int] = (),
        target_order: int | None = None,
    ) -> "StabChain":
        chain = cls(domain, [_Level(b, domain.size) for b in base_prefix])
        seeds = []
        seen = set()
        for g in gens:
            if g.domain is not domain:
                raise DomainMismatchError("generators act on different domains")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            seeds.append(g)
        for g in seeds:
            chain._insert_gen(g, 0)
        for lvl in chain.levels:
            chain._rebuild_orbit(lvl)
        if target_order is not None and chain.order == target_order:
            return chain
        i = len(chain.levels) - 1
        while i >= 0:
            jumped = chain._verify_level(i, target_order)
            if jumped is None:
                i -= 1
            elif jumped == -1:  # target order reached
                return chain
            else:
                i = jumped
        return chain

    @property
    def base(self) -> list[int]:
        return [lvl.beta for lvl in self.levels]

    @property
    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def suffix(self, k: int) -> "StabChain":
        return StabChain(self.domain, self.levels[k:])

    def strong_generators(self) -> list[Permutation]:
        out: dict[Permutation, None] = {}
        for lvl in self.levels:
            for g in lvl.gens:
                out[g] = None
        return list(out)

    # -- sifting ------------------------------------------------------------

    def sift(self, p: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip p through the chain from level `start`.

        Returns (residue, k) where k is the first level at which the image
        of the base point fell outside the fundamental orbit, or
        len(levels) if p was stripped through the whole chain.  p is a
        member of the level-`start` group iff the residue is the identity
        and k == len(levels).
        """
        img = p.image
        for k in range(start, len(self.levels)):
            lvl = self.levels[k]
            delta = int(img[lvl.beta])
            if delta == lvl.beta:
                continue
            if lvl.sv[delta] == -2:
                res = Permutation(self.domain, img, _validate=False)
                return res, k
            img = self._strip(lvl, delta, img)
        return Permutation(self.domain, img, _validate=False), len(self.levels)

    @staticmethod
    def _strip(lvl: _Level, delta: int, img: np.ndarray) -> np.ndarray:
        """Multiply img on the right by the inverse transversal rep of delta."""
        while delta != lvl.beta:
            t, d = divmod(int(lvl.sv[delta]), 2)
            undo = lvl.edges[t][1 - d]
            img = undo[img]
            delta = int(undo[delta])
        return img

    def _transversal_image(self, lvl: _Level, point: int) -> np.ndarray:
        """Image array of the coset representative u with beta^u = point."""
        codes = []
        p = point
        while p != lvl.beta:
            code = int(lvl.sv[p])
            codes.append(code)
            t, d = divmod(code, 2)
            p = int(lvl.edges[t][1 - d][p])
        img = self.domain._arange
        for code in reversed(codes):
            t, d = divmod(code, 2)
            img = lvl.edges[t][d][img]
        return img

    def transversal_element(self, k: int, point: int) -> Permutation:
        lvl = self.levels[k]
        if lvl.sv[point] == -2:
            raise ValueError(f"point {point} is not in the fundamental orbit")
        img = self._transversal_image(lvl, point)
        if img is self.domain._arange:
            return self.domain.identity()
        img = img.copy()
        img.setflags(write=False)
        return Permutation(self.domain, img, _validate=False)

    # -- internals ----------------------------------------------------------

    def _insert_gen(self, g: Permutation, lo: int) -> int:
        """Store g at levels lo..j where j is the first level whose base
        point g moves (appending a new base point if g fixes them all).
        Returns j.  Caller guarantees g fixes the base points before lo."""
        img = g.image
        j = None
        for k in range(lo, len(self.levels)):
            if img[self.levels[k].beta] != self.levels[k].beta:
                j = k
                break
        if j is None:
            beta = g.smallest_moved_point()
            self.levels.append(_Level(beta, self.domain.size))
            j = len(self.levels) - 1
        for k in range(lo, j + 1):
            lvl = self.levels[k]
            lvl.gens.append(g)
            lvl.processed.append(0)
        return j

    def _rebuild_orbit(self, lvl: _Level) -> None:
        """Full BFS rebuild with the GAP-style shallow-tree rule: when a
        point lands deeper than twice the tree size, promote its coset
        representative to a tree generator and start over."""
        lvl.edges = [(g.image, g.inverse().image) for g in lvl.gens]
        n = self.domain.size
        while True:
            lvl.sv = np.full(n, -2, dtype=np.int64)
            lvl.sv[lvl.beta] = -1
            lvl.depth = np.zeros(n, dtype=np.int32)
            lvl.orbit = [lvl.beta]
            deep_point = None
            pos = 0
            limit = 2 * max(len(lvl.edges), 1)
            while pos < len(lvl.orbit) and deep_point is None:
                a = lvl.orbit[pos]
                pos += 1
                da = int(lvl.depth[a])
                for t, (img, inv) in enumerate(lvl.edges):
                    for d, arr in ((0, img), (1, inv)):
                        b = int(arr[a])
                        if lvl.sv[b] == -2:
                            lvl.sv[b] = 2 * t + d
                            lvl.depth[b] = da + 1
                            lvl.orbit.append(b)
                            if da + 1 > limit:
                                deep_point = b
                                break
                    if deep_point is not None:
                        break
            if deep_point is None:
                return
            u = self._transversal_image(lvl, deep_point)
            u = u.copy()
            u_inv = np.empty(n, dtype=np.int32)
            u_inv[u] = self.domain._arange
            lvl.edges.append((u, u_inv))

    def _extend_orbit(self, lvl: _Level, first_new_gen: int) -> None:
        """Incremental BFS after appending generators (orbit only grows;
        existing Schreier vector entries stay valid)."""
        new_edges = [(g.image, g.inverse().image) for g in lvl.gens[first_new_gen:]]
        base_t = len(lvl.edges)
        lvl.edges.extend(new_edges)
        frontier = []
        for a in lvl.orbit:
            da = int(lvl.depth[a])
            for t_off, (img, inv) in enumerate(new_edges):
                t = base_t + t_off
                for d, arr in ((0, img), (1, inv)):
                    b = int(arr[a])
                    if lvl.sv[b] == -2:
                        lvl.sv[b] = 2 * t + d
                        lvl.depth[b] = da + 1
                        lvl.orbit.append(b)
                        frontier.append(b)
        pos = 0
        while pos < len(frontier):
            a = frontier[pos]
            pos += 1
            da = int(lvl.depth[a])
            for t, (img, inv) in enumerate(lvl.edges):
                for d, arr in ((0, img), (1, inv)):
                    b = int(arr[a])
                    if lvl.sv[b] == -2:
                        lvl.sv[b] = 2 * t + d
                        lvl.depth[b] = da + 1
                        lvl.orbit.append(b)
                        frontier.append(b)

    def _verify_level(self, i: int, target_order: int | None) -> int | None:
        """Sift the pending Schreier generators of level i.

        Returns None when the level is clean, -1 when the target order was
        reached, or the deepest level that received a new strong generator
        (verification must resume there).
        """
        lvl = self.levels[i]
        gi = 0
        while gi < len(lvl.gens):
            s_img = lvl.gens[gi].image
            pos = lvl.processed[gi]
            while pos < len(lvl.orbit):
                delta = lvl.orbit[pos]
                pos += 1
                lvl.processed[gi] = pos
                u_img = self._transversal_image(lvl, delta)
                h_img = s_img[u_img]  # u then s
                new_delta = int(h_img[lvl.beta])
                h_img = self._strip(lvl, new_delta, h_img)
                residue, fail = self.sift(
                    Permutation(self.domain, h_img, _validate=False), i + 1
                )
                if fail < len(self.levels) or not residue.is_identity():
                    j = self._insert_residue(residue, i + 1, fail)
                    if target_order is not None and self.order == target_order:
                        return -1
                    return j
            gi += 1
        return None

    def _insert_residue(self, residue: Permutation, lo: int, fail: int) -> int:
        j = self._insert_gen(residue, lo)
        for k in range(lo, j + 1):
            lvl = self.levels[k]
            if len(lvl.edges) == 0 and len(lvl.gens) == 1:
                self._rebuild_orbit(lvl)
            else:
                self._extend_orbit(lvl, len(lvl.gens) - 1)
        return j


# --------------------------------------------------------------------------
# permutation groups
# --------------------------------------------------------------------------

class PermGroup:
    """A permutation group given by generators, with a cached stabilizer
    chain providing exact order, membership and pointwise stabilizers."""

    __slots__ = ("domain", "generators", "_chain")

    def __init__(
        self,
        domain: Domain,
        generators: Iterable[Permutation],
        _chain: StabChain | None = None,
    ):
        gens = []
        for g in generators:
            if g.domain is not domain:
                raise DomainMismatchError("generators act on different domains")
            if not g.is_identity():
                gens.append(g)
        self.domain = domain
        self.generators = tuple(gens)
        self._chain = _chain

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain.build(self.domain, self.generators)
        return self._chain

    @property
    def order(self) -> int:
        return self.chain.order

    def is_trivial(self) -> bool:
        return len(self.generators) == 0

    def __contains__(self, p: Permutation) -> bool:
        if p.domain is not self.domain:
            return False
        residue, k = self.chain.sift(p)
        return k == len(self.chain.levels) and residue.is_identity()

    def base(self) -> list[int]:
        return self.chain.base

    def strong_generators(self) -> list[Permutation]:
        return self.chain.strong_generators() or list(self.generators)

    # -- orbits ---------------------------------------------------------------

    def orbit_of(self, point: int) -> OrbitTransversal:
        gens = self.generators if self.generators else (self.domain.identity(),)
        return orbit(gens, point)

    def orbits(self) -> list[list[int]]:
        return orbit_partition(self.generators, self.domain.size)

    def is_transitive(self) -> bool:
        if self.domain.size <= 1:
            return True
        return len(self.orbit_of(0)) == self.domain.size

    # -- stabilizers ------------------------------------------------------------

    def stabilizer_of_point(self, point: int) -> "PermGroup":
        """The subgroup fixing one point, with its own valid chain.

        Uses the cached chain suffix when the point is already the first
        base point; otherwise reruns Schreier-Sims with the point as the
        prescribed first base point, stopping at the order predicted by the
        orbit-stabilizer theorem.
        """
        if all(g.image[point] == point for g in self.generators):
            return self
        chain = self.chain
        if chain.levels and chain.levels[0].beta == point:
            sub = chain.suffix(1)
            gens = sub.levels[0].gens if sub.levels else []
            return PermGroup(self.domain, gens, _chain=sub)
        inputs = list(dict.fromkeys(list(self.generators) + chain.strong_generators()))
        target = self.order
        new_chain = StabChain.build(
            self.domain, inputs, base_prefix=(point,), target_order=target
        )
        sub = new_chain.suffix(1)
        gens = sub.levels[0].gens if sub.levels else []
        return PermGroup(self.domain, gens, _chain=sub)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        group: PermGroup = self
        for p in points:
            group = group.stabilizer_of_point(p)
        return group

    # -- element enumeration -----------------------------------------------------

    def elements(self) -> Iterator[Permutation]:
        """All group elements, by transversal products through the chain.

        Intended for small groups; the count equals ``order``.
        """
        chain = self.chain

        def walk(k: int) -> Iterator[Permutation]:
            if k == len(chain.levels):
                yield self.domain.identity()
                return
            lvl = chain.levels[k]
            for h in walk(k + 1):
                for delta in lvl.orbit:
                    yield h * chain.transversal_element(k, delta)

        return walk(0)

    def __repr__(self) -> str:
        built = self._chain is not None
        size = self.order if built else "?"
        return f"PermGroup(|domain|={self.domain.size}, order={size})"


def symmetric_natural(n: int) -> PermGroup:
    """Sym(n) in its natural action on 0..n-1."""
    dom = integers(n)
    if n <= 1:
        return PermGroup(dom, [])
    if n == 2:
        return PermGroup(dom, [dom.perm_from_cycles([0, 1])])
    return PermGroup(dom, [dom.perm_from_cycles([0, 1]), dom.perm_from_cycles(list(range(n)))])


# --------------------------------------------------------------------------
# action on unordered pairs
# --------------------------------------------------------------------------

class PairDomain(Domain):
    """The domain of unordered pairs {i, j}, i < j, of a base domain,
    sorted lexicographically; labels are pairs of base labels."""

    __slots__ = ("source", "lefts", "rights")

    def __init__(self, source: Domain):
        n = source.size
        ii, jj = np.triu_indices(n, k=1)
        labels = [(source.labels[i], source.labels[j]) for i, j in zip(ii.tolist(), jj.tolist())]
        super().__init__(labels)
        self.source = source
        self.lefts = ii.astype(np.int64)
        self.rights = jj.astype(np.int64)
        self.lefts.setflags(write=False)
        self.rights.setflags(write=False)

    def pair_index(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("pairs consist of two distinct points")
        if i > j:
            i, j = j, i
        n = self.source.size
        return i * (2 * n - i - 1) // 2 + (j - i - 1)


def pair_domain(source: Domain) -> PairDomain:
    return PairDomain(source)


def induced_pair_action(p: Permutation, pairs: PairDomain) -> Permutation:
    """The permutation {a, b} -> {a^p, b^p} on the pair domain.

    The map is a group homomorphism, injective as soon as the base domain
    has at least 3 points.
    """
    if not isinstance(pairs, PairDomain) or pairs.source is not p.domain:
        raise DomainMismatchError("pair domain was not derived from the permutation's domain")
    n = p.domain.size
    img64 = p.image.astype(np.int64)
    a = img64[pairs.lefts]
    b = img64[pairs.rights]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    idx = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
    img = idx.astype(np.int32)
    img.setflags(write=False)
    return Permutation(pairs, img, _validate=False)


# --------------------------------------------------------------------------
# block systems / primitivity
# --------------------------------------------------------------------------

def minimal_block(group: PermGroup, a: int, b: int) -> list[list[int]]:
    """The finest block system of a transitive group in which a and b share
    a block (Atkinson's union-find algorithm)."""
    n = group.domain.size
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x: int, y: int) -> int | None:
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return ry

    merged = union(a, b)
    queue = [merged] if merged is not None else []
    images = []
    for g in group.generators:
        images.append(g.image)
        images.append(g.inverse().image)
    while queue:
        gamma = queue.pop()
        rho = find(gamma)
        for img in images:
            lost = union(int(img[gamma]), int(img[rho]))
            if lost is not None:
                queue.append(lost)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values())


def is_primitive(group: PermGroup) -> bool:
    """Transitive with no nontrivial block system.

    Only one point per orbit of the first point stabilizer needs testing:
    block systems through conjugate pairs coincide up to translation.
    """
    n = group.domain.size
    if n <= 2:
        return group.is_transitive()
    if not group.is_transitive():
        return False
    stab = group.stabilizer_of_point(0)
    reps = [blk[0] for blk in stab.orbits() if blk != [0]]
    for delta in reps:
        if len(minimal_block(group, 0, delta)) != 1:
            return False
    return True
