"""Linear systems of plane curves, space quadrics, and biforms.

Conditions (incidence, singularity, divisor divisibility on a conic) become
rational rows indexed by a fixed monomial basis; a conjugate point over
QQ[a]/(p) contributes deg(p) rows, one per power-basis coordinate, which
encodes vanishing along its whole Galois orbit.  Dimensions and kernels are
exact: rank by fraction-free elimination, kernel from the reduced echelon
form with content-normalized vectors.
"""

from .arith import NFElem
from .errors import FieldMismatch
from .forms import BiForm, Form, biform_basis, monomial_basis
from .linalg import kernel_basis, rank_bareiss
from .scalars import QQ, ZERO


class FormSpace:
    """All forms of a fixed degree in 3 (plane) or 4 (space) variables."""

    def __init__(self, degree, variables=("x", "y", "z")):
        self.degree = degree
        self.variables = tuple(variables)
        self.basis = monomial_basis(len(self.variables), degree)

    def size(self):
        return len(self.basis)

    def from_vector(self, vec):
        return Form(self.variables, self.degree, dict(zip(self.basis, vec)))

    def describe(self):
        return "forms of degree %d in %d variables" % (
            self.degree,
            len(self.variables),
        )


class BiFormSpace:
    """All biforms of a fixed bidegree on P1 x P1."""

    def __init__(self, bidegree):
        self.bidegree = tuple(bidegree)
        self.basis = biform_basis(*self.bidegree)

    def size(self):
        return len(self.basis)

    def from_vector(self, vec):
        return BiForm(self.bidegree, dict(zip(self.basis, vec)))

    def describe(self):
        return "biforms of bidegree (%d,%d)" % self.bidegree


class LinCondition:
    """One rational linear condition on the coefficient vector of a form."""

    __slots__ = ("row", "provenance")

    def __init__(self, row, provenance=""):
        self.row = tuple(QQ(c) for c in row)
        self.provenance = provenance

    def __repr__(self):
        return "LinCondition(%s)" % self.provenance


class LinSysReport:
    """Exact outcome of a linear system of curves."""

    __slots__ = ("space", "n_conditions", "rank", "dimension", "kernel")

    def __init__(self, space, n_conditions, rank, dimension, kernel):
        self.space = space
        self.n_conditions = n_conditions
        self.rank = rank
        self.dimension = dimension
        self.kernel = kernel

    def __repr__(self):
        return "LinSysReport(dim=%d, rank=%d, %s)" % (
            self.dimension,
            self.rank,
            self.space.describe(),
        )


def _monomial_eval(coords, expo):
    term = None
    for c, e in zip(coords, expo):
        if e:
            p = c**e
            term = p if term is None else term * p
    if term is None:
        return QQ(1)
    return term


def _rows_from_values(values, field, provenance):
    """Turn per-monomial scalar values into 1 (rational) or deg (NF) rows."""
    if field is None:
        return [LinCondition([QQ(v) for v in values], provenance)]
    rows = []
    for k in range(field.degree):
        rows.append(
            LinCondition(
                [
                    v.coords[k] if isinstance(v, NFElem) else (QQ(v) if k == 0 else ZERO)
                    for v in values
                ],
                "%s [power-basis row %d]" % (provenance, k),
            )
        )
    return rows


def cond_point(space, p, provenance=None):
    """Vanishing at a point (or at its full conjugate orbit)."""
    if isinstance(space, BiFormSpace):
        return cond_point_biform(space, p, provenance)
    if len(p.coords) != len(space.variables):
        raise FieldMismatch("point dimension does not match the space")
    prov = provenance or "through %r" % (p,)
    values = [_monomial_eval(p.coords, e) for e in space.basis]
    return _rows_from_values(values, p.field, prov)


def cond_point_biform(space, pair, provenance=None):
    """Vanishing of a biform at a point of P1 x P1 given as a pair."""
    p, q = pair
    if p.field is not None or q.field is not None:
        raise FieldMismatch("biform point conditions require rational points")
    s, t = p.coords
    u, v = q.coords
    d1, d2 = space.bidegree
    prov = provenance or "through (%r, %r)" % (p, q)
    row = [s**i * t ** (d1 - i) * u**j * v ** (d2 - j) for (i, j) in space.basis]
    return [LinCondition(row, prov)]


def cond_singular(space, p, provenance=None):
    """Vanishing of all partial derivatives at a point (orbit-aware).

    The Euler relation makes the value condition redundant; all partial rows
    are emitted and rank computation absorbs any redundancy.
    """
    nvars = len(space.variables)
    if len(p.coords) != nvars:
        raise FieldMismatch("point dimension does not match the space")
    prov = provenance or "singular at %r" % (p,)
    rows = []
    for k in range(nvars):
        values = []
        for expo in space.basis:
            if expo[k] == 0:
                values.append(ZERO if p.field is None else p.field.zero())
                continue
            de = list(expo)
            de[k] -= 1
            values.append(expo[k] * _monomial_eval(p.coords, tuple(de)))
        rows.extend(
            _rows_from_values(values, p.field, "%s [d/d%s]" % (prov, space.variables[k]))
        )
    return rows


def cond_divisible_on_conic(degree, param, t_form, provenance=None):
    """Rows forcing the conic restriction of a candidate to be divisible by T.

    Obtained by polynomial division with a symbolic numerator: the deg(T)
    remainder coefficients, each a linear functional of the candidate's
    coefficients.
    """
    from .conics import restrict_to_conic

    space = FormSpace(degree, param.conic.variables)
    if t_form.degree == 0:
        return []
    prov = provenance or "contact-divisor divisibility"
    nmono = space.size()
    big = 2 * degree
    # symbolic restriction: sym[i][m] = coeff of s^i t^(big-i) in restrict(mono_m)
    sym = [[ZERO] * nmono for _ in range(big + 1)]
    for m, expo in enumerate(space.basis):
        r = restrict_to_conic(Form.monomial(space.variables, expo), param)
        for i, c in enumerate(r.coeffs):
            sym[i][m] = c
    rows = []
    tm = t_form.t_multiplicity()
    # t^tm divides the restriction: top s-coefficients vanish
    for i in range(big - tm + 1, big + 1):
        rows.append(LinCondition(sym[i], "%s [t-power row]" % prov))
    t0 = t_form.to_upoly()
    L = t0.degree()
    if L > 0:
        rem = [list(r) for r in sym]
        lead = t0.lc()
        for i in range(big, L - 1, -1):
            coefvec = [c / lead for c in rem[i]]
            if all(c == 0 for c in coefvec):
                continue
            for j in range(L + 1):
                tc = t0[j]
                if tc != 0:
                    rem[i - L + j] = [
                        a - tc * b for a, b in zip(rem[i - L + j], coefvec)
                    ]
        for i in range(L):
            rows.append(LinCondition(rem[i], "%s [remainder row %d]" % (prov, i)))
    return rows


def system_solve(space, conditions):
    """Exact dimension and kernel basis of a linear system of curves."""
    ncols = space.size()
    rows = [c.row for c in conditions]
    for r in rows:
        if len(r) != ncols:
            raise FieldMismatch("condition row length does not match the space")
    rank = rank_bareiss(rows) if rows else 0
    kernel_vecs = kernel_basis(rows, ncols)
    kernel = [space.from_vector(v) for v in kernel_vecs]
    return LinSysReport(
        space=space,
        n_conditions=len(rows),
        rank=rank,
        dimension=ncols - rank - 1,
        kernel=kernel,
    )


def general_position_p1xp1(points):
    """General position on P1 x P1 for up to 8 points.

    (a) every ruling fiber contains at most two of the points;
    (b) no (1,1)-curve passes through five of them.
    """
    keys1 = [p.canonical_key() for p, _ in points]
    keys2 = [q.canonical_key() for _, q in points]
    for keys in (keys1, keys2):
        counts = {}
        for k in keys:
            counts[k] = counts.get(k, 0) + 1
            if counts[k] > 2:
                return False
    space = BiFormSpace((1, 1))
    if len(points) >= 5:
        import itertools

        for subset in itertools.combinations(points, 5):
            rows = []
            for pair in subset:
                rows.extend(c.row for c in cond_point_biform(space, pair))
            if rank_bareiss(rows) < 4:
                return False
    return True
