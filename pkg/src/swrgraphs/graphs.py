"""Simple undirected graphs: representation, graph6 codec, family constructors,
and structural predicates.

Vertex orderings in every constructor are fixed so that outputs are
byte-for-byte reproducible: Cartesian products use lexicographic pairs,
line graphs sort edges lexicographically, clique extensions interleave
clique copies per original vertex.
"""

from __future__ import annotations

from itertools import combinations, product
from math import isqrt
from typing import Iterable, Iterator, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 record; the message names the offending byte offset."""


class FamilyError(ValueError):
    """Unknown family name or family parameter out of range."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is symmetric and loop-free; neighbor lists are sorted tuples.
    Instances are never mutated after construction, so they are safe to share
    across threads.
    """

    __slots__ = ("n", "_nbrs", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range [0,{n})")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self._sets = tuple(frozenset(s) for s in nbrs)
        self._nbrs = tuple(tuple(sorted(s)) for s in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._nbrs) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(s) for s in self._nbrs), reverse=True))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._sets == other._sets

    def __hash__(self) -> int:
        return hash((self.n, self._sets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# graph6 codec
#
# Record layout per the standard format: N(n) header, then the upper triangle
# of the adjacency matrix read column by column ((0,1), (0,2), (1,2), (0,3),
# ...), packed big-endian into 6-bit groups, each group + 63, zero-padded.
# Header: one byte n+63 for n <= 62, else 0x7E followed by three bytes (18-bit
# n), else 0x7E 0x7E followed by six bytes (36-bit n).
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047  # largest n this writer emits (4-byte header form)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional '>>graph6<<' prefix is stripped)."""
    record = text.strip()
    base = 0
    if record.startswith(_G6_HEADER):
        record = record[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not record:
        raise Graph6Error("empty graph6 record")
    vals = []
    for off, ch in enumerate(record):
        code = ord(ch)
        if not (63 <= code <= 126):
            raise Graph6Error(
                f"byte {base + off}: character {code!r} outside graph6 range [63,126]")
        vals.append(code - 63)

    # N(n)
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error(f"byte {base + len(record)}: truncated 4-byte length header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n <= 62:
            raise Graph6Error(f"byte {base}: non-minimal length header for n={n}")
    else:
        if len(vals) < 8:
            raise Graph6Error(f"byte {base + len(record)}: truncated 8-byte length header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
        if n <= _G6_MAX_N:
            raise Graph6Error(f"byte {base}: non-minimal length header for n={n}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - pos != nbytes:
        raise Graph6Error(
            f"byte {base + pos}: expected {nbytes} data bytes for n={n}, got {len(vals) - pos}")

    edges = []
    bit = 0
    i, j = 0, 1  # current upper-triangle slot, column-major
    for off in range(pos, len(vals)):
        group = vals[off]
        for shift in (5, 4, 3, 2, 1, 0):
            if bit < nbits:
                if (group >> shift) & 1:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
                bit += 1
            elif (group >> shift) & 1:
                raise Graph6Error(f"byte {base + off}: nonzero padding bit")
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 record (no trailing newline)."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"n={n} exceeds the graph6 writer limit {_G6_MAX_N}")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]

    out = list(head)
    group = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group, nbits = 0, 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return "".join(chr(c) for c in out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield (line_number, record, graph) for each non-blank, non-comment line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line, parse_graph6(line)


# ---------------------------------------------------------------------------
# Operations on graphs
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return Graph(g.n, edges)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Block-diagonal union; vertices of gs[i] are shifted past all earlier parts."""
    n = 0
    edges = []
    for g in gs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product: (u,v) ~ (u',v') iff u=u' and v~v', or v=v' and u~u'.

    Vertex (u, v) maps to index u*h.n + v (lexicographic pairs).
    """
    hn = h.n
    edges = []
    for u in range(g.n):
        edges.extend((u * hn + a, u * hn + b) for a, b in h.edges)
    for a, b in g.edges:
        edges.extend((a * hn + v, b * hn + v) for v in range(hn))
    return Graph(g.n * hn, edges)


def clique_extension(g: Graph, s: int) -> Graph:
    """Replace each vertex by an s-clique; cliques of adjacent vertices are joined."""
    if s < 1:
        raise ValueError("clique size must be at least 1")
    edges = []
    for v in range(g.n):
        edges.extend((v * s + i, v * s + j) for i, j in combinations(range(s), 2))
    for u, v in g.edges:
        edges.extend((u * s + i, v * s + j) for i in range(s) for j in range(s))
    return Graph(g.n * s, edges)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g (sorted lexicographically); adjacency is sharing an endpoint."""
    ed = g.edges
    edges = [(i, j) for i, j in combinations(range(len(ed)), 2)
             if set(ed[i]) & set(ed[j])]
    return Graph(len(ed), edges)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    verts = list(combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(verts)}
    edges = [(idx[p], idx[q]) for p, q in combinations(verts, 2)
             if not set(p) & set(q)]
    return Graph(10, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    for d in range(3, isqrt(q) + 1, 2):
        if q % d == 0:
            return False
    return True


def paley_graph(q: int) -> Graph:
    """Vertices Z_q, i ~ j iff i-j is a nonzero quadratic residue mod q.

    Restricted to prime q with q = 1 (mod 4), which makes the residue
    relation symmetric.
    """
    if not _is_prime(q):
        raise FamilyError(f"paley parameter {q} is not prime")
    if q % 4 != 1:
        raise FamilyError(f"paley parameter {q} is not 1 mod 4")
    residues = {(x * x) % q for x in range(1, q)}
    edges = [(i, j) for i, j in combinations(range(q), 2) if (j - i) % q in residues]
    return Graph(q, edges)


def hamming_graph(d: int, q: int) -> Graph:
    """Words of length d over a q-letter alphabet, adjacent iff Hamming distance 1."""
    if d < 1 or q < 2:
        raise FamilyError("hamming needs d >= 1 and q >= 2")
    words = list(product(range(q), repeat=d))
    idx = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for c in range(w[pos] + 1, q):
                edges.append((idx[w], idx[w[:pos] + (c,) + w[pos + 1:]]))
    return Graph(len(words), edges)


def heawood_graph() -> Graph:
    """Incidence graph of the Fano plane.

    Points and lines are both the nonzero vectors of the 3-dimensional binary
    space (encoded 1..7); point p lies on line l iff the dot product p.l
    vanishes mod 2. Vertices 0..6 are points, 7..13 are lines.
    """
    edges = []
    for p in range(1, 8):
        for l in range(1, 8):
            if bin(p & l).count("1") % 2 == 0:
                edges.append((p - 1, 7 + l - 1))
    return Graph(14, edges)


def _take_int(tokens: list[str], what: str) -> int:
    if not tokens:
        raise FamilyError(f"missing {what}")
    tok = tokens.pop(0)
    try:
        return int(tok)
    except ValueError:
        raise FamilyError(f"{what} must be an integer, got {tok!r}") from None


def construct_family(tokens: Sequence[str]) -> Graph:
    """Build a named family from a token list, e.g. ["paley", "13"].

    Known names (dashes and underscores interchangeable):
      empty N | complete N | complete-bipartite A B | cycle N | petersen |
      paley Q | hamming D Q | heawood | line-graph-of FAMILY... |
      clique-ext FAMILY... S | complement-kmm-km M
    """
    toks = [str(t) for t in tokens]
    if not toks:
        raise FamilyError("missing family name")
    name = toks.pop(0).replace("-", "_").lower()

    def done(g: Graph) -> Graph:
        if toks:
            raise FamilyError(f"unexpected extra parameters: {' '.join(toks)}")
        return g

    if name == "empty":
        n = _take_int(toks, "vertex count")
        if n < 0:
            raise FamilyError("vertex count must be nonnegative")
        return done(empty_graph(n))
    if name == "complete":
        n = _take_int(toks, "vertex count")
        if n < 0:
            raise FamilyError("vertex count must be nonnegative")
        return done(complete_graph(n))
    if name == "complete_bipartite":
        a = _take_int(toks, "part size a")
        b = _take_int(toks, "part size b")
        if a < 0 or b < 0:
            raise FamilyError("part sizes must be nonnegative")
        return done(complete_bipartite(a, b))
    if name == "cycle":
        return done(cycle_graph(_take_int(toks, "cycle length")))
    if name == "path":
        n = _take_int(toks, "path length")
        if n < 1:
            raise FamilyError("path needs at least 1 vertex")
        return done(path_graph(n))
    if name == "petersen":
        return done(petersen_graph())
    if name == "paley":
        return done(paley_graph(_take_int(toks, "paley order")))
    if name == "hamming":
        d = _take_int(toks, "hamming length d")
        q = _take_int(toks, "hamming alphabet q")
        return done(hamming_graph(d, q))
    if name == "heawood":
        return done(heawood_graph())
    if name == "line_graph_of":
        if not toks:
            raise FamilyError("line-graph-of needs an inner family")
        return line_graph(construct_family(toks))
    if name == "clique_ext":
        if len(toks) < 2:
            raise FamilyError("clique-ext needs an inner family and a clique size")
        s_tok = toks.pop()
        try:
            s = int(s_tok)
        except ValueError:
            raise FamilyError(f"clique size must be an integer, got {s_tok!r}") from None
        if s < 1:
            raise FamilyError("clique size must be at least 1")
        return clique_extension(construct_family(toks), s)
    if name == "complement_kmm_km":
        m = _take_int(toks, "parameter m")
        if m < 1:
            raise FamilyError("parameter m must be at least 1")
        return done(complement(cartesian_product(complete_bipartite(m, m),
                                                 complete_graph(m))))
    raise FamilyError(f"unknown family {tokens[0]!r}")


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_regular(g: Graph) -> int | None:
    """The common valency, or None when degrees differ (or the graph has no vertices)."""
    if g.n == 0:
        return None
    k = g.degree(0)
    return k if all(g.degree(v) == k for v in range(1, g.n)) else None


def _component_vertices(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """True when there is one component; the 0-vertex graph counts as connected."""
    return len(_component_vertices(g)) <= 1


def components(g: Graph) -> list[Graph]:
    """Connected components as graphs, relabeled 0..size-1, ordered by smallest vertex."""
    out = []
    for comp in _component_vertices(g):
        idx = {v: i for i, v in enumerate(comp)}
        edges = [(idx[u], idx[v]) for u in comp for v in g.neighbors(u)
                 if u < v]
        out.append(Graph(len(comp), edges))
    return out


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in edge-mask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, (p for i, p in enumerate(pairs) if (mask >> i) & 1))
