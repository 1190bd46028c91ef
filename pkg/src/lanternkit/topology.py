"""Plumbing graphs, fibration homology, kernel lattices and blowdown arithmetic."""

import json
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from .contfrac import cf_expand
from .intlinalg import det, is_negative_definite as _neg_def, left_kernel, rank, solve_unimodular
from .planar import MonodromyWord, enclosed_holes, homology_matrix, pairwise_disjoint

EXACT_BASIS = "exact_basis"
INVARIANTS_ONLY = "invariants_only"
MISMATCH = "mismatch"


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PlumbingGraph:
    weights: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    family: str = ""
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        n = len(self.weights)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
        if n and not nx.is_connected(self.to_networkx()):
            raise ValueError("plumbing graph must be connected")

    def __len__(self):
        return len(self.weights)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from((i, {"weight": w}) for i, w in enumerate(self.weights))
        g.add_edges_from(self.edges)
        return g

    def to_dot(self) -> str:
        name = self.family or "G"
        lines = [f"graph {name} {{"]
        lines += [f'  v{i} [label="{w}"];' for i, w in enumerate(self.weights)]
        lines += [f"  v{u} -- v{v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params),
                "weights": list(self.weights), "edges": [list(e) for e in self.edges]}


class _Builder:
    def __init__(self):
        self.weights: List[int] = []
        self.edges: List[Tuple[int, int]] = []

    def add(self, weight, attach=None) -> int:
        self.weights.append(weight)
        v = len(self.weights) - 1
        if attach is not None:
            self.edges.append((attach, v))
        return v

    def chain(self, weights, attach=None) -> Optional[int]:
        last = attach
        for w in weights:
            last = self.add(w, last)
        return last

    def graph(self, family, params) -> PlumbingGraph:
        return PlumbingGraph(tuple(self.weights), tuple(self.edges), family, tuple(params))


def gamma_w(p: int, q: int, r: int) -> PlumbingGraph:
    """Star with a -4 center and three legs of -2 chains capped by -(p+3), -(q+3), -(r+3)."""
    for v in (p, q, r):
        if v < 0:
            raise ValueError("parameters must be nonnegative")
    b = _Builder()
    center = b.add(-4)
    b.chain([-2] * q + [-(p + 3)], center)
    b.chain([-2] * r + [-(q + 3)], center)
    b.chain([-2] * p + [-(r + 3)], center)
    return b.graph("Gamma", (p, q, r))


def delta_n(p: int, q: int, r: int) -> PlumbingGraph:
    for v in (p, q, r):
        if v < 0:
            raise ValueError("parameters must be nonnegative")
    b = _Builder()
    if p >= 1:
        last = b.chain([-(r + 3)] + [-2] * (p - 1) + [-3] + [-2] * q)
        branch = b.add(-3, last)
        b.add(-(p + 2), branch)
        b.chain([-2] * r + [-(q + 4)], branch)
    else:
        last = b.chain([-(r + 4)] + [-2] * q)
        branch = b.add(-3, last)
        b.add(-2, branch)
        b.chain([-2] * r + [-(q + 4)], branch)
    g = b.graph("Delta", (p, q, r))
    # self-check of the encoding
    if len(g) != p + q + r + 4 or not is_negative_definite(g):
        raise AssertionError(f"Delta{(p, q, r)} encoding failed its self-check")
    return g


def linear_chain(p: int, q: int) -> PlumbingGraph:
    coeffs = cf_expand(p, q).coefficients
    b = _Builder()
    b.chain([-c for c in coeffs])
    return b.graph("C", (p, q))


def intersection_matrix(g: PlumbingGraph) -> np.ndarray:
    n = len(g)
    m = np.zeros((n, n), dtype=np.int64)
    for i, w in enumerate(g.weights):
        m[i, i] = w
    for u, v in g.edges:
        m[u, v] = m[v, u] = 1
    return m


def graph_det(g: PlumbingGraph) -> int:
    return det(intersection_matrix(g))


def is_negative_definite(g: PlumbingGraph) -> bool:
    return _neg_def(intersection_matrix(g))


# -- Lefschetz fibrations over the disk -----------------------------------------

@dataclass(frozen=True)
class FibrationHomology:
    b1: int
    b2: int
    torsion_order: Optional[int]

    @property
    def rational_ball(self) -> bool:
        return self.b1 == 0 and self.b2 == 0


def fibration_homology(w: MonodromyWord) -> FibrationHomology:
    """Rational homology of the fibration over the disk with monodromy ``w``."""
    m = homology_matrix(w)
    n = w.surface.n
    r = rank(m) if len(m) else 0
    order = None
    if m.shape[0] == n and r == n:
        order = abs(det(m))
    return FibrationHomology(n - r, m.shape[0] - r, order)


def _curve_tree(w: MonodromyWord):
    """Distinct curves of ``w`` with the word rows holding each, and their children."""
    copies = defaultdict(list)
    row = 0
    for t in w.letters:
        key = frozenset(enclosed_holes(t.curve, w.surface))
        for _ in range(abs(t.power)):
            copies[key].append(row)
            row += 1
    keys = sorted(copies, key=len)
    children = {}
    for k in keys:
        inner = [c for c in keys if c < k]
        children[k] = [c for c in inner if not any(c < d for d in inner)]
    return copies, children, row


def canonical_basis(w: MonodromyWord) -> np.ndarray:
    """Forest basis of the kernel for a word of pairwise disjoint curves.

    For a curve used ``m`` times: the ``m - 1`` differences of consecutive
    copies.  For a curve whose maximal inner curves cover its holes: its
    first copy minus the last copies of those inner curves.
    """
    copies, children, nrows = _curve_tree(w)
    vectors = []
    for key in sorted(copies, key=lambda k: copies[k][0]):
        rows = copies[key]
        for a, b in zip(rows, rows[1:]):
            v = np.zeros(nrows, dtype=object)
            v[a], v[b] = 1, -1
            vectors.append(v)
        kids = children[key]
        if kids and frozenset().union(*kids) == key:
            v = np.zeros(nrows, dtype=object)
            v[rows[0]] = 1
            for kid in kids:
                v[copies[kid][-1]] -= 1
            vectors.append(v)
    if not vectors:
        return np.zeros((0, nrows), dtype=object)
    return np.array(vectors, dtype=object)


def kernel_gram(w: MonodromyWord, basis: str = "canonical"):
    """Integer kernel of the incidence matrix and its Gram matrix ``-(u . v)``.

    ``basis="canonical"`` returns the forest basis when it is a basis of the
    saturated kernel, otherwise the echelon basis.
    """
    disjoint = pairwise_disjoint(w.curves(), w.surface)
    if disjoint is not True:
        raise PreconditionError("kernel_gram needs pairwise disjoint curves")
    m = homology_matrix(w)
    kernel = left_kernel(m)
    vectors = kernel
    if basis == "canonical":
        forest = canonical_basis(w)
        if _same_lattice(forest, kernel):
            vectors = forest
    g = -vectors.dot(vectors.T) if len(vectors) else np.zeros((0, 0), dtype=object)
    return vectors, g


def _same_lattice(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    if not len(a):
        return True
    try:
        coords = solve_unimodular(b, a)
    except ValueError:
        return False
    return abs(det(coords)) == 1


def _gram_to_graph(g: np.ndarray) -> Optional[nx.Graph]:
    """Plumbing graph of a Gram matrix whose off-diagonal support is a forest."""
    n = g.shape[0]
    graph = nx.Graph()
    for i in range(n):
        graph.add_node(i, weight=int(g[i, i]))
    for i in range(n):
        for j in range(i + 1, n):
            if g[i, j]:
                if abs(g[i, j]) != 1:
                    return None
                graph.add_edge(i, j)
    # on a forest every sign pattern can be flipped to +1 edges
    if not nx.is_forest(graph):
        return None
    return graph


def matches_plumbing(w: MonodromyWord, g: PlumbingGraph) -> dict:
    try:
        vectors, gm = kernel_gram(w)
    except PreconditionError as exc:
        return {"verdict": MISMATCH, "reason": str(exc)}
    k = gm.shape[0]
    info = {"rank": k, "vertices": len(g)}
    if k != len(g):
        return dict(info, verdict=MISMATCH, reason="rank differs from vertex count")
    graph = _gram_to_graph(gm)
    if graph is not None and nx.is_isomorphic(
            graph, g.to_networkx(), node_match=lambda a, b: a["weight"] == b["weight"]):
        return dict(info, verdict=EXACT_BASIS)
    kd, gd = det(gm), graph_det(g)
    neg = _neg_def(gm)
    info.update(kernel_det=kd, graph_det=gd, kernel_negative_definite=neg)
    if abs(kd) == abs(gd) and neg == is_negative_definite(g):
        return dict(info, verdict=INVARIANTS_ONLY)
    return dict(info, verdict=MISMATCH, reason="lattice invariants differ")


# -- blowdown arithmetic ----------------------------------------------------------

def blowdown_invariants(chi: int, sigma: int, g: PlumbingGraph) -> Tuple[int, int]:
    """Euler characteristic and signature after replacing the plumbing by a rational ball."""
    if len(g) and not is_negative_definite(g):
        raise ValueError("blowdown needs a negative definite plumbing")
    return chi - len(g), sigma + len(g)


HOMEO_CAVEAT = ("assumes a simply connected manifold with odd intersection form; "
                "neither property is checked here")


def homeo_type(chi: int, sigma: int) -> dict:
    plus2, minus2 = chi - 2 + sigma, chi - 2 - sigma
    if plus2 % 2 or minus2 % 2 or plus2 < 0 or minus2 < 0:
        raise ValueError(f"(chi, sigma) = ({chi}, {sigma}) has no valid b2+/b2-")
    bp, bm = plus2 // 2, minus2 // 2
    return {"b2plus": bp, "b2minus": bm,
            "display": f"#{bp} CP2 # {bm} CP2bar", "caveat": HOMEO_CAVEAT}


@dataclass(frozen=True)
class FibrationInvariants:
    genus: int
    length: int
    chi: int
    sigma: int
    b2plus: int = field(init=False)
    b2minus: int = field(init=False)

    def __post_init__(self):
        t = homeo_type(self.chi, self.sigma)
        object.__setattr__(self, "b2plus", t["b2plus"])
        object.__setattr__(self, "b2minus", t["b2minus"])

    @classmethod
    def closed(cls, genus: int, length: int, sigma: int) -> "FibrationInvariants":
        """Fibration over the sphere with ``length`` singular fibers."""
        return cls(genus, length, 2 * (2 - 2 * genus) + length, sigma)

    def to_dict(self) -> dict:
        return asdict(self)


# -- theta chains --------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaChainDescriptor:
    p: int
    q: int
    c_sequence: Tuple[int, ...]
    links: Tuple[Tuple[int, int], ...]  # (twists, framing) per link
    degenerate: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "c_sequence": list(self.c_sequence),
                "links": [{"twists": t, "framing": f} for t, f in self.links],
                "degenerate": self.degenerate, "note": self.note}


def theta_chain(p: int, q: int) -> ThetaChainDescriptor:
    e = cf_expand(p, q)
    c = e.c_sequence
    if q == 1:
        return ThetaChainDescriptor(p, q, c, (), True,
                                    "q = 1: classical picture with a single one-handle")
    if len(c) == 1:
        links = [(-(c[0] - 2), -(c[0] - 3))]
    else:
        links = [(-(c[0] - 3), -(c[0] - 4))]
        links += [(-(cj - 2), -(cj - 2)) for cj in c[1:-1]]
        links.append((-(c[-1] - 1), -(c[-1] - 1)))
    return ThetaChainDescriptor(p, q, c, tuple(links))


def to_json(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True)
