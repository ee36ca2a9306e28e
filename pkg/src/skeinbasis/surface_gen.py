"""Triangulated genus-g, p-punctured surfaces with explicit pants decompositions.

The surface is cut horizontally into a top handle, middle handles, a bottom
handle, then (for p >= 2) a chain of annuli and a once-punctured disk.  Edge
labels, in edge order:

    h1.1 h1.2 h1.3 h1.4 b1 | f2 h2.1..h2.4 b2 | ... | bottom | d1 v1 b{g+1} ... fo

With one puncture the bottom handle has just its four ``h`` edges.  With more
punctures it looks like a middle handle (``f_g``, four ``h``, ``b_g``) and is
followed by ``p - 2`` annuli ``(d_k, v_k, b_{g+k})`` and the folded edge ``fo``.

Every handle carries the same four-edge block, and most curve vectors are
assembled from eight fixed 4-vectors on those blocks (the ``Lexicon``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, NotAdmissible
from .exactlinalg import IntMatrix, block_reduce, det_exact, det_fraction, is_unit_mod, power_of_two
from .normal_curves import disjoint, trace_components
from .triangulation import Triangulation


class GeneratorError(RuntimeError):
    """A generated object broke an invariant it is built to satisfy."""


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 1 or self.punctures < 1:
            raise ValueError("need genus >= 1 and at least one puncture")
        if 2 - 2 * self.genus - self.punctures >= 0:
            raise ValueError("Euler characteristic must be negative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def num_edges(self) -> int:
        return -3 * self.euler_characteristic

    @property
    def num_triangles(self) -> int:
        return -2 * self.euler_characteristic

    @property
    def pants_size(self) -> int:
        return 3 * self.genus - 3 + self.punctures


@dataclass(frozen=True)
class Lexicon:
    a: tuple = (1, 1, 0, 1)
    b: tuple = (1, 0, 1, 1)
    c: tuple = (1, 1, 2, 3)
    d: tuple = (3, 3, 2, 1)
    e: tuple = (3, 2, 1, 1)
    f: tuple = (3, 3, 2, 3)
    two: tuple = (2, 2, 2, 2)
    zero: tuple = (0, 0, 0, 0)

    def relations_hold(self) -> bool:
        add = lambda *vs: tuple(map(sum, zip(*vs)))
        neg = lambda v: tuple(-x for x in v)
        return (
            self.d == add(self.e, self.two, neg(self.a), neg(self.b))
            and self.e == add(self.two, self.a, self.b, neg(self.c))
            and self.f == add(self.a, self.two)
        )


LEX = Lexicon()


def _h(i: int) -> list[str]:
    return [f"h{i}.{k}" for k in range(1, 5)]


def _has_lower_b(spec: SurfaceSpec, i: int) -> bool:
    """Whether handle ``i`` has the f_i / b_i pair of a middle handle."""
    return i < spec.genus or spec.punctures > 1


def edge_labels(spec: SurfaceSpec) -> list[str]:
    g, p = spec.genus, spec.punctures
    if g == 1 and p == 1:
        return ["x", "y", "z"]
    cols = _h(1) + ["b1"]
    for i in range(2, g + 1):
        mid = _has_lower_b(spec, i)
        cols += ([f"f{i}"] if mid else []) + _h(i) + ([f"b{i}"] if mid else [])
    if p > 1:
        for k in range(1, p - 1):
            cols += [f"d{k}", f"v{k}", f"b{g + k}"]
        cols.append("fo")
    return cols


def triangles(spec: SurfaceSpec) -> list[tuple[str, str, str]]:
    """Triangles as (side 0, side 1, side 2) edge labels.

    The cyclic orders are the ones for which every curve built by
    ``build_curves`` traces to a single component and each of the two pants
    families is pairwise disjoint.
    """
    g, p = spec.genus, spec.punctures
    if g == 1 and p == 1:
        return [("x", "y", "z"), ("x", "y", "z")]
    h = _h(1)
    out = [("b1", h[0], h[3]), (h[0], h[1], h[2]), (h[1], h[2], h[3])]
    for i in range(2, g + 1):
        h = _h(i)
        if _has_lower_b(spec, i):
            out += [(f"b{i - 1}", f"b{i}", f"f{i}"), (f"f{i}", h[0], h[3])]
        else:
            out.append((f"b{i - 1}", h[0], h[3]))
        out += [(h[0], h[1], h[2]), (h[1], h[2], h[3])]
    if p > 1:
        for k in range(1, p - 1):
            out += [(f"d{k}", f"v{k}", f"b{g + k - 1}"), (f"d{k}", f"v{k}", f"b{g + k}")]
        out.append(("fo", "fo", f"b{g + p - 2}"))
    return out


def build_triangulation(spec: SurfaceSpec) -> Triangulation:
    t = Triangulation.from_triangles(triangles(spec), names=edge_labels(spec))
    if t.num_edges != spec.num_edges or t.num_triangles != spec.num_triangles:
        raise GeneratorError(f"{spec}: got {t.num_edges} edges and {t.num_triangles} triangles")
    return t


# ---------------------------------------------------------------------------
# curves


class _Row:
    def __init__(self, cols: list[str]):
        self.cols = cols
        self.idx = {c: i for i, c in enumerate(cols)}
        self.v = [0] * len(cols)

    def set(self, col: str, val: int) -> "_Row":
        # absent columns (f_g, b_g with one puncture) are skipped on purpose
        if col in self.idx:
            self.v[self.idx[col]] = val
        return self

    def block(self, i: int, vec) -> "_Row":
        for col, val in zip(_h(i), vec):
            self.v[self.idx[col]] = val
        return self

    def twos_through(self, col: str) -> "_Row":
        for c in self.cols[: self.idx[col] + 1]:
            self.v[self.idx[c]] = 2
        return self


def _curve_rows(spec: SurfaceSpec, alternate_s_g: bool) -> list[tuple[str, list[int]]]:
    g, p = spec.genus, spec.punctures
    cols = edge_labels(spec)
    new = lambda: _Row(cols)
    L = LEX

    def c_row(i):
        r = new().block(1, L.d).set("b1", 2)
        for j in range(2, i + 1):
            r.set(f"f{j}", 4).block(j, L.f).set(f"b{j}", 2)
        return r.set(f"f{i + 1}", 2).block(i + 1, L.c).set(f"b{i + 1}", 0)

    rows = []
    for i in range(1, g):
        rows.append((f"a{i}", new().block(i, L.a).v))
        rows.append((f"b{i}", new().block(i, L.b).v))
        e = new().set(f"f{i}", 2).block(i, L.e).set(f"b{i}", 2).set(f"f{i + 1}", 2).block(i + 1, L.b)
        rows.append((f"e{i}", e.v))
        last = f"f{i + 1}" if f"f{i + 1}" in cols else f"b{i}"
        rows.append((f"s{i}", new().twos_through(last).block(i + 1, L.b).v))
        hr = new().block(1, L.a).set("b1", 2)
        for j in range(2, i + 1):
            hr.set(f"f{j}", 2).block(j, L.a).set(f"b{j}", 2)
        rows.append((f"h{i}", hr.set(f"f{i + 1}", 2).block(i + 1, L.a).v))
        if i > 1:
            rows.append((f"c{i - 1}", c_row(i - 1).v))
    rows.append((f"a{g}", new().block(g, L.a).v))
    rows.append((f"b{g}", new().block(g, L.b).v))
    rows.append((f"c{g - 1}", c_row(g - 1).v))
    if p == 1:
        rows.append(("del1", [2] * len(cols)))
        return rows

    m = p - 2

    def wrap_first(r):
        # loop around the first puncture: (1, 1) on d1, v1, or fo=1 when p=2
        return r.set("d1", 1).set("v1", 1) if m else r.set("fo", 1)

    if alternate_s_g:
        sg = wrap_first(new().set(f"f{g}", 2).block(g, L.e).set(f"b{g}", 2))
    else:
        sg = wrap_first(new().twos_through(f"b{g}").block(g, L.b))
    rows.append((f"s{g}", sg.v))
    cg = c_row(g - 1).set(f"f{g}", 4).block(g, L.f).set(f"b{g}", 2)
    for k in range(1, m + 1):
        cg.set(f"d{k}", 2).set(f"b{g + k}", 2)
    rows.append((f"c{g}", cg.set("fo", 1).v))
    rows.append(("del1", wrap_first(new().twos_through(f"b{g}")).v))
    for i in range(1, m + 1):
        rows.append((f"u{i}", new().set(f"d{i}", 1).set(f"v{i}", 1).v))
    for i in range(1, m + 1):
        x = new().twos_through(f"b{g}")
        for j in range(1, i + 1):
            x.set(f"d{j}", 2).set(f"b{g + j}", 2)
        if i < m:
            x.set(f"d{i + 1}", 1).set(f"v{i + 1}", 1)
        else:
            x.set("fo", 1)
        rows.append((f"x{i}", x.v))
    for i in range(2, p + 1):
        r = new()
        if i - 1 <= m:
            r.set(f"d{i - 1}", 1).set(f"v{i - 1}", 1).set(f"b{g + i - 1}", 2)
        if i <= m:
            r.set(f"d{i}", 1).set(f"v{i}", 1)
        if i >= p - 1:
            r.set("fo", 1)
        rows.append((f"del{i}", r.v))
    return rows


def family_of(name: str) -> str:
    """'P', 'Q' or 'boundary' for a generated curve name."""
    if name.startswith("del"):
        return "boundary"
    return "P" if name[0] in "achx" else "Q"


@dataclass(frozen=True)
class CurveFamily:
    spec: SurfaceSpec
    triangulation: Triangulation
    curves: tuple[tuple[str, Coloring], ...]  # in matrix row order

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.curves]

    def __getitem__(self, name: str) -> Coloring:
        return dict(self.curves)[name]

    def _select(self, fam: str) -> list[tuple[str, Coloring]]:
        return [(n, c) for n, c in self.curves if family_of(n) == fam]

    @property
    def P(self):
        return self._select("P")

    @property
    def Q(self):
        return self._select("Q")

    @property
    def boundaries(self):
        return self._select("boundary")


def build_curves(spec: SurfaceSpec, alternate_s_g: bool = False) -> CurveFamily:
    """Pants families P and Q plus the puncture curves, as colorings.

    ``alternate_s_g`` swaps in an alternative s_g row for p >= 2; the resulting
    matrix is singular and it is kept only so that tests can show it.
    """
    if spec.genus < 2:
        raise ValueError("curve families are generated for genus >= 2")
    t = build_triangulation(spec)
    curves = []
    for name, vec in _curve_rows(spec, alternate_s_g):
        try:
            curves.append((name, Coloring(t, tuple(vec))))
        except NotAdmissible as exc:
            raise GeneratorError(f"curve {name} is not admissible: {exc}") from None
    fam = CurveFamily(spec, t, tuple(curves))
    if len(fam.P) != spec.pants_size or len(fam.Q) != spec.pants_size:
        raise GeneratorError(f"{spec}: |P|={len(fam.P)}, |Q|={len(fam.Q)}")
    if len(curves) != spec.num_edges:
        raise GeneratorError(f"{spec}: {len(curves)} curves for {spec.num_edges} edges")
    return fam


def intersection_matrix(spec: SurfaceSpec, alternate_s_g: bool = False) -> IntMatrix:
    return IntMatrix(tuple(c.values for _, c in build_curves(spec, alternate_s_g).curves))


def pants_problems(fam: CurveFamily) -> list[str]:
    """Geometric sanity of the families; empty when P and Q are pants decompositions.

    Checks that every curve traces to one component, that P, Q and the
    puncture curves are each pairwise disjoint, that puncture curves miss
    every other curve, and that no pants curve is parallel to a puncture.
    """
    problems = []
    for name, c in fam.curves:
        k = len(trace_components(c, allow_folded=True))
        if k != 1:
            problems.append(f"{name} has {k} components")
    if problems:
        return problems
    bvals = {c.values for _, c in fam.boundaries}
    for fam_name, members in (("P", fam.P), ("Q", fam.Q)):
        vals = [c.values for _, c in members]
        if len(set(vals)) != len(vals):
            problems.append(f"{fam_name} has repeated curves")
        for name, c in members:
            if c.values in bvals:
                problems.append(f"{name} is parallel to a puncture")
        for i, (n1, c1) in enumerate(members):
            for n2, c2 in members[i + 1:]:
                if not disjoint(c1, c2, allow_folded=True):
                    problems.append(f"{n1} meets {n2}")
    for bname, bc in fam.boundaries:
        for name, c in fam.curves:
            if name != bname and not disjoint(bc, c, allow_folded=True):
                problems.append(f"{bname} meets {name}")
    return problems


# ---------------------------------------------------------------------------
# determinants


@dataclass(frozen=True)
class SplitCertificate:
    genus: int
    punctures: int
    size: int
    det: int
    exponent: int
    unit_mod: dict = field(default_factory=dict)

    @property
    def sign(self) -> int:
        return 1 if self.det > 0 else -1

    @property
    def certified(self) -> bool:
        return all(self.unit_mod.values())

    def ranks(self) -> dict:
        k = 3 * self.genus - 3 + self.punctures
        center = 6 * self.genus - 6 + 2 * self.punctures
        return {
            "exponents": {"pantsFactor": k, "overCenter": center},
            "byModulus": {
                str(n): {"pantsFactor": str(n**k), "overCenter": str(n**center)} for n in sorted(self.unit_mod)
            },
        }

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "punctures": self.punctures,
            "size": self.size,
            "det": str(self.det),
            "powerOfTwoExponent": self.exponent,
            "sign": self.sign,
            "unitMod": {str(n): ok for n, ok in sorted(self.unit_mod.items())},
            "ranks": self.ranks(),
        }


def verify_pants_split(spec: SurfaceSpec, moduli=(3, 5, 7, 9, 15)) -> SplitCertificate:
    """Exact determinant of the P, Q, puncture-curve matrix and its unit checks."""
    moduli = sorted(set(moduli))
    for n in moduli:
        if n < 1 or n % 2 == 0:
            raise ValueError(f"modulus must be odd and positive, got {n}")
    m = intersection_matrix(spec)
    det = det_exact(m)
    k = power_of_two(det)
    if k is None:
        raise GeneratorError(f"{spec}: determinant {det} is not a signed power of two")
    if spec.punctures == 1 and det != -(2 ** (4 * spec.genus - 3)):
        raise GeneratorError(f"{spec}: determinant {det}, expected -2^{4 * spec.genus - 3}")
    return SplitCertificate(
        spec.genus, spec.punctures, m.nrows, det, k, {n: is_unit_mod(det, n) for n in moduli}
    )


def block_sizes(spec: SurfaceSpec) -> list[int]:
    """Row blocks: top handle, one per further handle, then the puncture rows."""
    g, p = spec.genus, spec.punctures
    if p == 1:
        return [5] + [6] * (g - 2) + [4]
    return [5] + [6] * (g - 1) + [3 * p - 5]


def block_reduction(spec: SurfaceSpec) -> list[int]:
    """Determinants of the diagonal blocks after clearing above-right entries.

    Their product is the full determinant.
    """
    blocks = block_reduce(intersection_matrix(spec).rows, block_sizes(spec))
    out = []
    for b in blocks:
        d = det_fraction(b)
        if d.denominator != 1:
            raise GeneratorError(f"{spec}: non-integral block determinant {d}")
        out.append(int(d))
    return out


def bottom_block(p: int) -> IntMatrix:
    """Rows u_i, x_i, del_2..del_{p-1} restricted to the annulus columns.

    The block does not depend on the genus.
    """
    if p < 3:
        raise ValueError("the puncture block needs p >= 3")
    spec = SurfaceSpec(2, p)
    fam = build_curves(spec)
    cols = edge_labels(spec)
    want_cols = [cols.index(x) for k in range(1, p - 1) for x in (f"d{k}", f"v{k}", f"b{2 + k}")]
    names = [f"u{i}" for i in range(1, p - 1)] + [f"x{i}" for i in range(1, p - 1)]
    names += [f"del{i}" for i in range(2, p)]
    return IntMatrix(tuple(tuple(fam[n].values[j] for j in want_cols) for n in names))
