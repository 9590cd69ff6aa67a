"""Torsion functors on contractible subcomplexes and the derived
simplicial abelian group.

A torsion functor is stored by its values on faces only; values on
arbitrary contractible subcomplexes are recovered on demand through the
inclusion-exclusion extension, attaching one face at a time.  The
extension is evaluated along two independent attachment orders and the
results compared, so a disagreement surfaces as an error instead of a
silent wrong answer.

The simplicial group built here has p-simplices the functors at ambient
dimension p+1 that vanish on the 0-th face region and satisfy face-horn
duality for every face.  Its normalized chain complex is degreewise
isomorphic to the two-periodic complex ... -> A -> A -> A -> 0 via the
evaluation at the 0-th vertex, which is the central comparison this
package verifies against the independent C2-homology computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import lattice
from .abelian import FgAbGroup, InvolutiveAbelianGroup
from .simplicial import (SubComplex, _collapses_to_point, codegeneracy_face,
                         coface_face, face_boundary, face_dim, face_str,
                         face_from_str, subfaces)

__all__ = [
    "TorsionFunctor",
    "FAlgElement",
    "FAlgGroup",
    "MooreComplex",
    "NotContractibleError",
    "InconsistentFunctorError",
    "iota_shriek",
    "raw_degeneracy",
    "check_square",
    "check_face_horn_duality",
    "generalized_duality_holds",
    "mixed_duality_holds",
    "duality_criterion",
    "falg_group",
    "normalized_group",
    "moore_complex",
    "moore_homotopy",
    "psi",
    "psi_section",
    "psi_is_bijective",
    "all_dualities_hold",
]


class NotContractibleError(ValueError):
    """A torsion functor was evaluated outside its domain."""


class InconsistentFunctorError(ValueError):
    """Two attachment orders disagreed: the input data was malformed."""


def _top_mask(p):
    return (1 << (p + 1)) - 1


def _all_faces(p):
    return sorted(range(1, _top_mask(p) + 1), key=lambda f: (face_dim(f), f))


def _proper_faces(p):
    top = _top_mask(p)
    return [f for f in _all_faces(p) if f != top]


def _closure(faces):
    out = set()
    for f in faces:
        out.update(subfaces(f))
    return frozenset(out)


def _maximal(faces):
    return sorted(f for f in faces
                  if not any(g != f and g & f == f for g in faces))


def _sign(k):
    return 1 if k % 2 == 0 else -1


class TorsionFunctor:
    """Functor on contractible subcomplexes of the ambient simplex,
    valued in an involutive abelian group, satisfying the pushout-square
    condition by construction when built from face values alone.

    ``table``-backed instances carry explicit values on every
    contractible subcomplex instead and may fail the square condition;
    they model raw pullbacks along codegeneracies.
    """

    __slots__ = ("ambient", "target", "values", "table", "_memo")

    def __init__(self, ambient, target, face_values, table=None):
        self.ambient = ambient
        self.target = target
        g = target.generator_count
        zero = (0,) * g
        values = {}
        for face in _all_faces(ambient):
            if face == _top_mask(ambient):
                continue
            if face not in face_values:
                raise ValueError(f"missing value on face {face_str(face)}")
            vec = tuple(face_values[face])
            if len(vec) != g:
                raise ValueError("face value has wrong coordinate length")
            values[face] = target.reduce(vec)
        top = _top_mask(ambient)
        if top in face_values and not target.is_zero_element(face_values[top]):
            raise ValueError("the top face value must be zero")
        values[top] = zero
        self.values = values
        self.table = None
        if table is not None:
            self.table = {k: target.reduce(v) for k, v in table.items()}
        self._memo = {}

    # -- group structure -------------------------------------------------

    @classmethod
    def zero(cls, ambient, target):
        z = (0,) * target.generator_count
        return cls(ambient, target,
                   {f: z for f in _proper_faces(ambient)})

    def _binary(self, other, op):
        if not isinstance(other, TorsionFunctor) \
                or other.ambient != self.ambient \
                or other.target != self.target:
            raise ValueError("functor mismatch")
        vals = {f: tuple(op(x, y) for x, y in zip(self.values[f], other.values[f]))
                for f in _proper_faces(self.ambient)}
        table = None
        if self.table is not None and other.table is not None:
            table = {k: tuple(op(x, y) for x, y in zip(v, other.table[k]))
                     for k, v in self.table.items()}
        return TorsionFunctor(self.ambient, self.target, vals, table)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __neg__(self):
        vals = {f: tuple(-x for x in v) for f, v in self.values.items()
                if f != _top_mask(self.ambient)}
        table = None
        if self.table is not None:
            table = {k: tuple(-x for x in v) for k, v in self.table.items()}
        return TorsionFunctor(self.ambient, self.target, vals, table)

    def is_zero(self):
        zero = (0,) * self.target.generator_count
        return all(v == zero for v in self.values.values())

    def __eq__(self, other):
        return (isinstance(other, TorsionFunctor)
                and self.ambient == other.ambient
                and self.target == other.target
                and self.values == other.values
                and self.table == other.table)

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.values.items()))))

    # -- evaluation --------------------------------------------------------

    def _zero_vec(self):
        return (0,) * self.target.generator_count

    def face_value(self, face):
        return self.values[face]

    def value_on(self, complex_or_faces):
        """tau(ambient simplex, K) for a contractible subcomplex K."""
        if isinstance(complex_or_faces, SubComplex):
            faces = frozenset(complex_or_faces.faces)
        else:
            faces = frozenset(complex_or_faces)
        if not faces:
            raise NotContractibleError("empty complex")
        if self.table is not None:
            key = tuple(sorted(faces))
            if key in self.table:
                return self.table[key]
            raise NotContractibleError("complex outside the stored table")
        if not _collapses_to_point(faces):
            raise NotContractibleError(
                "torsion functors are defined on contractible subcomplexes only")
        return self._value(faces)

    def _value(self, faces):
        memo = self._memo
        if faces in memo:
            return memo[faces]
        maximal = _maximal(faces)
        if len(maximal) == 1:
            out = self.values[maximal[0]]
            memo[faces] = out
            return out
        admissible = []
        for sigma in maximal:
            rest = [m for m in maximal if m != sigma]
            rest_closure = _closure(rest)
            inter = rest_closure & frozenset(subfaces(sigma))
            if inter and _collapses_to_point(rest_closure) \
                    and _collapses_to_point(inter):
                admissible.append((sigma, rest_closure, inter))
        if not admissible:
            raise NotContractibleError(
                "no admissible face-attachment order for this complex")
        out = self._attach(*admissible[0])
        if len(admissible) > 1:
            alt = self._attach(*admissible[-1])
            if alt != out:
                raise InconsistentFunctorError(
                    "attachment orders disagree: malformed functor data")
        memo[faces] = out
        return out

    def _attach(self, sigma, rest_closure, inter):
        a = self._value(rest_closure)
        b = self.values[sigma]
        c = self._value(inter)
        return self.target.reduce(
            tuple(x + y - z for x, y, z in zip(a, b, c)))

    def pair_value(self, larger, smaller):
        """tau(L, K) = tau(top, K) - tau(top, L) for K inside L."""
        vl = self.value_on(larger)
        vk = self.value_on(smaller)
        return self.target.reduce(tuple(x - y for x, y in zip(vk, vl)))

    def union_of_faces_value(self, face_list):
        """Closed-form value on a union of face closures.

        Requires every iterated intersection to be a nonempty face (true
        for horns and unions of boundary faces of a common face), which
        makes the inclusion-exclusion expansion exact in one pass.
        """
        faces = sorted(set(face_list))
        n = len(faces)
        g = self.target.generator_count
        acc = [0] * g
        for mask in range(1, 1 << n):
            inter = _top_mask(self.ambient)
            bits = 0
            for i in range(n):
                if mask >> i & 1:
                    inter &= faces[i]
                    bits += 1
            if inter == 0:
                raise ValueError("intersection pattern leaves the face poset")
            val = self.values[inter]
            sgn = _sign(bits + 1)
            for r in range(g):
                acc[r] += sgn * val[r]
        return self.target.reduce(tuple(acc))

    def horn_value(self, sigma, i):
        d = face_dim(sigma)
        return self.union_of_faces_value(
            [face_boundary(sigma, j) for j in range(d + 1) if j != i])

    # -- cosimplicial structure maps ----------------------------------------

    def coface_restrict(self, j):
        """Restriction along the coface embedding the (ambient-1)-simplex
        as the j-th boundary face."""
        p = self.ambient
        if not 0 <= j <= p:
            raise IndexError("coface index out of range")
        base = self.values[_top_mask(p) & ~(1 << j)]
        vals = {}
        for sigma in _proper_faces(p - 1):
            img = coface_face(sigma, j)
            v = self.values[img]
            vals[sigma] = tuple(x - y for x, y in zip(v, base))
        return TorsionFunctor(p - 1, self.target, vals)

    def codegeneracy(self, j):
        """Corrected degeneracy: pull back face values along the
        codegeneracy vertex map, then re-extend by inclusion-exclusion."""
        p = self.ambient
        if not 0 <= j <= p:
            raise IndexError("codegeneracy index out of range")
        vals = {}
        for sigma in _proper_faces(p + 1):
            vals[sigma] = self.values[codegeneracy_face(sigma, j)]
        return TorsionFunctor(p + 1, self.target, vals)

    def face_values_copy(self):
        return dict(self.values)

    def __repr__(self):
        parts = ", ".join(f"{face_str(f)}:{list(v)}"
                          for f, v in sorted(self.values.items()))
        return f"TorsionFunctor(p={self.ambient}, {{{parts}}})"


def iota_shriek(face_values, p, target):
    """Extend face values to the full functor (values by face only).

    The extension to any contractible subcomplex happens lazily in
    ``value_on``; attachment-order independence is asserted there.
    """
    return TorsionFunctor(p, target, face_values)


@lru_cache(maxsize=None)
def _contractible_keys(p):
    from .simplicial import enumerate_contractible_subcomplexes
    return [frozenset(k.faces) for k in enumerate_contractible_subcomplexes(p)]


def raw_degeneracy(tf, i):
    """The uncorrected degeneracy: plain pullback of all values along the
    codegeneracy.  Generally leaves the square-condition subgroup; kept
    as the counterexample showing why the corrected degeneracy re-extends
    from face values.

    Only available onto ambient dimension <= 2: from ambient 3 onward a
    collapse map can take a contractible subcomplex onto a circle (e.g.
    the edge path 02,23,13 onto the full boundary of the triangle), so
    the raw pullback is not even everywhere defined there.  Face values
    never see this, which is the point of the corrected degeneracy.
    """
    p = tf.ambient + 1
    if p > 2:
        raise ValueError("raw degeneracies exist only onto ambient <= 2")
    if not 0 <= i <= tf.ambient:
        raise IndexError("codegeneracy index out of range")
    table = {}
    face_values = {}
    for faces in _contractible_keys(p):
        img = frozenset(codegeneracy_face(f, i) for f in faces)
        val = tf.value_on(img)
        table[tuple(sorted(faces))] = val
        maximal = _maximal(faces)
        if len(maximal) == 1 and len(faces) == len(set(subfaces(maximal[0]))):
            face_values[maximal[0]] = val
    return TorsionFunctor(p, tf.target, face_values, table)


def check_square(tf):
    """Exhaustively verify the pushout-square condition (ambient <= 3)."""
    p = tf.ambient
    if p > 3:
        raise ValueError("exhaustive square checking is capped at ambient 3")
    keys = _contractible_keys(p)
    keyset = set(keys)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            k0, k1 = keys[a], keys[b]
            inter = k0 & k1
            if not inter:
                continue
            union = k0 | k1
            if inter not in keyset or union not in keyset:
                continue
            lhs = tf.value_on(inter)
            rhs = tf.value_on(union)
            v0 = tf.value_on(k0)
            v1 = tf.value_on(k1)
            test = tuple(w + x - y - z for w, x, y, z in zip(lhs, rhs, v0, v1))
            if not tf.target.is_zero_element(test):
                return False
    return True


def _duality_ok(tf, sigma, i):
    d = face_dim(sigma)
    lhs = tf.target.reduce(tuple(
        x - y for x, y in zip(tf.values[face_boundary(sigma, i)],
                              tf.values[sigma])))
    inner = tuple(x - y for x, y in zip(tf.horn_value(sigma, i),
                                        tf.values[sigma]))
    acted = tf.target.act(inner)
    sgn = _sign(d)
    diff = tuple(x - sgn * y for x, y in zip(lhs, acted))
    return tf.target.is_zero_element(diff)


def check_face_horn_duality(tf, sigma):
    """Face-horn duality of tau at one face, for every omitted index."""
    if face_dim(sigma) < 1:
        return True
    return all(_duality_ok(tf, sigma, i) for i in range(face_dim(sigma) + 1))


def all_dualities_hold(tf):
    return all(check_face_horn_duality(tf, sigma)
               for sigma in _all_faces(tf.ambient) if face_dim(sigma) >= 1)


def generalized_duality_holds(tf, sigma, index_set):
    """tau(sigma, boundary union over I) against the complementary union."""
    d = face_dim(sigma)
    idx = sorted(set(index_set))
    if not idx or len(idx) > d:
        raise ValueError("the index set must be a proper nonempty subset")
    comp = [j for j in range(d + 1) if j not in idx]
    lhs_inner = tf.union_of_faces_value([face_boundary(sigma, j) for j in idx])
    rhs_inner = tf.union_of_faces_value([face_boundary(sigma, j) for j in comp])
    base = tf.values[sigma]
    lhs = tuple(x - y for x, y in zip(lhs_inner, base))
    acted = tf.target.act(tuple(x - y for x, y in zip(rhs_inner, base)))
    sgn = _sign(d)
    diff = tuple(x - sgn * y for x, y in zip(lhs, acted))
    return tf.target.is_zero_element(diff)


def _pure_boundary(k_faces):
    """Codim-one faces lying in exactly one of the given top faces."""
    counts = {}
    for f in k_faces:
        verts = face_dim(f) + 1
        for i in range(verts):
            b = face_boundary(f, i)
            counts[b] = counts.get(b, 0) + 1
    return sorted(b for b, c in counts.items() if c == 1)


def mixed_duality_holds(tf, k_faces, q_faces):
    """Duality for a pure union K of k-faces against a boundary piece Q.

    Q must be a contractible union of (k-1)-faces inside the boundary of
    K; the complementary side is the closure of the remaining boundary
    (k-1)-faces.
    """
    k_faces = sorted(set(k_faces))
    dims = {face_dim(f) for f in k_faces}
    if len(dims) != 1:
        raise ValueError("K must be a union of faces of one dimension")
    k = dims.pop()
    bfaces = _pure_boundary(k_faces)
    q_faces = sorted(set(q_faces))
    if not set(q_faces) <= set(bfaces):
        raise ValueError("Q must consist of boundary faces of K")
    rest = [b for b in bfaces if b not in q_faces]
    kc = _closure(k_faces)
    lhs = tf.pair_value(kc, _closure(q_faces))
    rhs_inner = tf.pair_value(kc, _closure(rest))
    acted = tf.target.act(rhs_inner)
    sgn = _sign(k)
    diff = tuple(x - sgn * y for x, y in zip(lhs, acted))
    return tf.target.is_zero_element(diff)


def duality_criterion(tf):
    """Inductive duality criterion: once every proper face satisfies
    face-horn duality and the top face satisfies it for the 0-th horn,
    check that the top face satisfies it for every horn.

    Raises if the hypothesis itself fails.
    """
    p = tf.ambient
    top = _top_mask(p)
    for sigma in _all_faces(p):
        if sigma == top or face_dim(sigma) < 1:
            continue
        if not check_face_horn_duality(tf, sigma):
            raise ValueError("hypothesis fails: a proper face breaks duality")
    if p >= 1 and not _duality_ok(tf, top, 0):
        raise ValueError("hypothesis fails: 0-th face-horn duality at the top")
    if p == 0:
        return True
    return all(_duality_ok(tf, top, i) for i in range(1, p + 1))


# -- the simplicial abelian group ----------------------------------------


def _z_condition_holds(tf):
    p = tf.ambient
    region = _top_mask(p) & ~1
    base = tf.values[region]
    for sigma in subfaces(region):
        if tf.values[sigma] != base:
            return False
    return True


@dataclass(frozen=True)
class FAlgElement:
    """A p-simplex of the simplicial group: a torsion functor at ambient
    p+1 vanishing on the 0-th face region and dual at every face."""

    functor: TorsionFunctor

    def __post_init__(self):
        if self.functor.ambient < 1:
            raise ValueError("simplex degree must be at least 0")
        if not _z_condition_holds(self.functor):
            raise ValueError("functor does not vanish on the 0-th face region")
        if not all_dualities_hold(self.functor):
            raise ValueError("functor violates face-horn duality")

    @property
    def degree(self):
        return self.functor.ambient - 1

    @property
    def target(self):
        return self.functor.target

    @classmethod
    def from_face_values(cls, target, p, face_values):
        return cls(iota_shriek(face_values, p + 1, target))

    @classmethod
    def zero(cls, target, p):
        return cls(TorsionFunctor.zero(p + 1, target))

    @staticmethod
    def is_valid_values(target, p, face_values):
        """Cheap membership check on raw face values, without construction."""
        try:
            tf = iota_shriek(face_values, p + 1, target)
        except ValueError:
            return False
        return _z_condition_holds(tf) and all_dualities_hold(tf)

    def __add__(self, other):
        return FAlgElement(self.functor + other.functor)

    def __sub__(self, other):
        return FAlgElement(self.functor - other.functor)

    def __neg__(self):
        return FAlgElement(-self.functor)

    def is_zero(self):
        return self.functor.is_zero()

    def face(self, i):
        """delta_i: restriction along the (i+1)-st coface."""
        p = self.degree
        if p == 0:
            raise IndexError("0-simplices have no faces")
        if not 0 <= i <= p:
            raise IndexError("face index out of range")
        return FAlgElement(self.functor.coface_restrict(i + 1))

    def degeneracy(self, i):
        """s_i: the corrected degeneracy at index i+1."""
        p = self.degree
        if not 0 <= i <= p:
            raise IndexError("degeneracy index out of range")
        return FAlgElement(self.functor.codegeneracy(i + 1))

    def is_normalized(self):
        return all(self.face(i).is_zero() for i in range(1, self.degree + 1))

    def psi_value(self):
        """Evaluation at the 0-th vertex (the chain isomorphism to A)."""
        return self.functor.values[1]

    def to_dict(self, target_name=None):
        return {
            "p": self.degree,
            "target": target_name if target_name is not None
            else self.target.to_dict(),
            "face_values": {face_str(f): list(v)
                            for f, v in sorted(self.functor.values.items())
                            if f != _top_mask(self.functor.ambient)},
        }

    @classmethod
    def from_dict(cls, data, target=None):
        if target is None:
            target = InvolutiveAbelianGroup.from_dict(data["target"])
        p = int(data["p"])
        vals = {face_from_str(s): tuple(int(x) for x in v)
                for s, v in data["face_values"].items()}
        return cls.from_face_values(target, p, vals)


# -- constraint systems ---------------------------------------------------


@lru_cache(maxsize=None)
def _membership_rows(target, ambient):
    """Integer constraint rows for membership at the given ambient level.

    Unknowns: one coordinate block per proper face (dimension g each).
    Each returned block of g rows must land in the relation lattice.
    """
    g = target.generator_count
    faces = _proper_faces(ambient)
    index = {f: k for k, f in enumerate(faces)}
    n_unknowns = g * len(faces)
    t_rows = target.involution.row_list()
    top = _top_mask(ambient)
    rows = []

    def emit(ident_coeffs, act_coeffs):
        for r in range(g):
            row = [0] * n_unknowns
            for f, c in ident_coeffs.items():
                if f == top or c == 0:
                    continue
                row[index[f] * g + r] += c
            for f, c in act_coeffs.items():
                if f == top or c == 0:
                    continue
                base = index[f] * g
                for j in range(g):
                    if t_rows[r][j]:
                        row[base + j] += c * t_rows[r][j]
            rows.append(row)

    # vanishing on the 0-th face region
    region = top & ~1
    for sigma in subfaces(region):
        if sigma != region:
            emit({sigma: 1, region: -1}, {})

    # face-horn duality at every face
    for sigma in _all_faces(ambient):
        d = face_dim(sigma)
        if d < 1:
            continue
        sgn = _sign(d)
        for i in range(d + 1):
            ident = {face_boundary(sigma, i): 1, sigma: -1}
            act = {}
            others = [face_boundary(sigma, j) for j in range(d + 1) if j != i]
            for mask in range(1, 1 << len(others)):
                inter = top
                bits = 0
                for b in range(len(others)):
                    if mask >> b & 1:
                        inter &= others[b]
                        bits += 1
                act[inter] = act.get(inter, 0) - sgn * _sign(bits + 1)
            act[sigma] = act.get(sigma, 0) + sgn
            emit(ident, act)

    return rows, len(faces)


def _normalization_rows(target, degree):
    """Rows forcing delta_i = 0 for 1 <= i <= degree (on top of membership)."""
    ambient = degree + 1
    g = target.generator_count
    faces = _proper_faces(ambient)
    index = {f: k for k, f in enumerate(faces)}
    n_unknowns = g * len(faces)
    top = _top_mask(ambient)
    rows = []
    for i in range(1, degree + 1):
        base_face = top & ~(1 << (i + 1))
        for sigma in _proper_faces(degree):
            img = coface_face(sigma, i + 1)
            for r in range(g):
                row = [0] * n_unknowns
                if img != top:
                    row[index[img] * g + r] += 1
                row[index[base_face] * g + r] -= 1
                if any(row):
                    rows.append(row)
    return rows


def _delta0_rows(target, degree):
    """Rows forcing delta_0 = 0 at the given degree."""
    ambient = degree + 1
    g = target.generator_count
    faces = _proper_faces(ambient)
    index = {f: k for k, f in enumerate(faces)}
    n_unknowns = g * len(faces)
    top = _top_mask(ambient)
    base_face = top & ~2
    rows = []
    for sigma in _proper_faces(degree):
        img = coface_face(sigma, 1)
        for r in range(g):
            row = [0] * n_unknowns
            if img != top:
                row[index[img] * g + r] += 1
            row[index[base_face] * g + r] -= 1
            if any(row):
                rows.append(row)
    return rows


def _block_lattice_cols(target, n_faces):
    """Relation columns of the target, one copy per face block."""
    g = target.generator_count
    rel_cols = target.relations.column_list()
    out = []
    for k in range(n_faces):
        for col in rel_cols:
            vec = [0] * (g * n_faces)
            vec[k * g:(k + 1) * g] = col
            out.append(vec)
    return out


def _den_for_rows(target, n_rows_blocks):
    """Denominator columns in constraint-output space: one relation copy
    per g-row block."""
    g = target.generator_count
    rel_cols = target.relations.column_list()
    out = []
    for b in range(n_rows_blocks):
        for col in rel_cols:
            vec = [0] * (g * n_rows_blocks)
            vec[b * g:(b + 1) * g] = col
            out.append(vec)
    return out


def _solution_basis(target, rows, n_unknowns):
    """Basis of {x : every g-block of C x lies in the relation lattice}."""
    g = target.generator_count
    if n_unknowns == 0:
        return []
    if not rows or g == 0:
        return lattice.identity(n_unknowns)
    if len(rows) % g:
        raise AssertionError("constraint rows are not block aligned")
    den = _den_for_rows(target, len(rows) // g)
    return lattice.kernel_with_denominator(rows, den, n_unknowns)


@lru_cache(maxsize=None)
def _falg_basis(target, ambient):
    rows, n_faces = _membership_rows(target, ambient)
    g = target.generator_count
    return _solution_basis(target, rows, g * n_faces), n_faces


@lru_cache(maxsize=None)
def _normalized_basis(target, degree):
    ambient = degree + 1
    rows, n_faces = _membership_rows(target, ambient)
    rows = [list(r) for r in rows] + _normalization_rows(target, degree)
    g = target.generator_count
    return _solution_basis(target, rows, g * n_faces), n_faces


def _vector_to_values(vec, g, faces):
    return {f: tuple(vec[k * g:(k + 1) * g]) for k, f in enumerate(faces)}


@dataclass
class FAlgGroup:
    """The group of p-simplices, solved from the linear constraint system."""

    target: InvolutiveAbelianGroup
    degree: int
    isomorphism_type: FgAbGroup
    generator_vectors: list
    faces: list

    @property
    def order(self):
        return self.isomorphism_type.order()

    def generators(self):
        g = self.target.generator_count
        return [FAlgElement.from_face_values(
            self.target, self.degree, _vector_to_values(v, g, self.faces))
            for v in self.generator_vectors]

    def element_vectors(self):
        """All solution vectors, canonically reduced per face block."""
        factors = self.isomorphism_type.invariant_factors
        if any(f == 0 for f in factors):
            raise ValueError("cannot enumerate an infinite group")
        g = self.target.generator_count
        n = len(self.faces) * g

        def reduce_vec(vec):
            out = []
            for k in range(len(self.faces)):
                out.extend(self.target.reduce(vec[k * g:(k + 1) * g]))
            return tuple(out)

        seen = set()
        coeffs = [range(f) for f in factors]

        def rec(i, acc):
            if i == len(factors):
                red = reduce_vec(acc)
                if red not in seen:
                    seen.add(red)
                    yield red
                return
            gen = self.generator_vectors[i]
            for c in coeffs[i]:
                yield from rec(i + 1, [a + c * b for a, b in zip(acc, gen)])

        yield from rec(0, [0] * n)

    def elements(self):
        g = self.target.generator_count
        for vec in self.element_vectors():
            yield FAlgElement.from_face_values(
                self.target, self.degree, _vector_to_values(vec, g, self.faces))


def falg_group(target, p):
    """Solve the membership constraints at simplex degree p (finite target)."""
    if p > 3:
        raise ValueError("constraint solving is capped at degree 3")
    if target.order() is None:
        raise ValueError("the constraint solver requires a finite target")
    ambient = p + 1
    basis, n_faces = _falg_basis(target, ambient)
    g = target.generator_count
    faces = _proper_faces(ambient)
    den = _block_lattice_cols(target, n_faces)
    factors, gens = lattice.quotient_with_generators(basis, den, g * n_faces)
    return FAlgGroup(target, p, FgAbGroup.from_factors(factors), gens, faces)


def normalized_group(target, degree):
    """The degree-n part of the normalized chain complex, as a group."""
    if target.order() is None:
        raise ValueError("normalized enumeration requires a finite target")
    basis, n_faces = _normalized_basis(target, degree)
    g = target.generator_count
    faces = _proper_faces(degree + 1)
    den = _block_lattice_cols(target, n_faces)
    factors, gens = lattice.quotient_with_generators(basis, den, g * n_faces)
    return FAlgGroup(target, degree, FgAbGroup.from_factors(factors), gens, faces)


def _delta0_matrix_apply(target, degree, vec):
    """Coordinates of delta_0(x) one level down, from raw coordinates."""
    ambient = degree + 1
    g = target.generator_count
    faces_hi = _proper_faces(ambient)
    idx_hi = {f: k for k, f in enumerate(faces_hi)}
    top = _top_mask(ambient)
    base_face = top & ~2
    out = []
    for sigma in _proper_faces(degree):
        img = coface_face(sigma, 1)
        block = [0] * g
        if img != top:
            k = idx_hi[img]
            block = list(vec[k * g:(k + 1) * g])
        kb = idx_hi[base_face]
        base = vec[kb * g:(kb + 1) * g]
        out.extend(x - y for x, y in zip(block, base))
    return out


def moore_homotopy(target, n):
    """Homotopy of the simplicial group: homology of the normalized
    complex at degree n, computed purely from the constraint lattices.

    This path shares no code with ``homology_c2`` beyond the integer
    kernel, which is the point: the two must agree.
    """
    if n > 3:
        raise ValueError("homotopy computation is capped at degree 3")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if target.order() is None:
        raise ValueError("the constraint path requires a finite target")
    g = target.generator_count
    ambient = n + 1
    faces = _proper_faces(ambient)
    n_unknowns = g * len(faces)
    if g == 0:
        return FgAbGroup.trivial()

    rows, _ = _membership_rows(target, ambient)
    rows = [list(r) for r in rows] + _normalization_rows(target, n)
    if n >= 1:
        rows += _delta0_rows(target, n)
    cycles = _solution_basis(target, rows, n_unknowns)

    upstairs, _ = _normalized_basis(target, n + 1)
    boundary_cols = [_delta0_matrix_apply(target, n + 1, v) for v in upstairs]
    den = boundary_cols + _block_lattice_cols(target, len(faces))
    return FgAbGroup.from_factors(
        lattice.quotient_factors(cycles, den, n_unknowns))


@dataclass
class MooreComplex:
    """Normalized chain complex data: per-degree lattice bases for the
    normalized subgroups and the images of the 0-th face map."""

    target: InvolutiveAbelianGroup
    max_degree: int
    bases: list
    boundary_images: list  # boundary_images[m] = delta_0(basis of degree m+1)

    def boundary_squares_to_zero(self):
        for m in range(self.max_degree - 1):
            for vec in self.bases[m + 2]:
                once = _delta0_matrix_apply(self.target, m + 2, vec)
                twice = _delta0_matrix_apply(self.target, m + 1, once)
                g = self.target.generator_count
                for k in range(len(twice) // g if g else 0):
                    if not self.target.is_zero_element(twice[k * g:(k + 1) * g]):
                        return False
        return True


def moore_complex(target, max_degree):
    bases = [_normalized_basis(target, m)[0] for m in range(max_degree + 1)]
    images = []
    for m in range(max_degree):
        images.append([_delta0_matrix_apply(target, m + 1, v)
                       for v in bases[m + 1]])
    return MooreComplex(target, max_degree, bases, images)


def psi(element):
    """Evaluation at the 0-th vertex, defined on the normalized part."""
    if not element.is_normalized():
        raise ValueError("psi is defined on normalized simplices")
    return element.psi_value()


def psi_section(target, n, value):
    """The normalized simplex with given 0-th vertex evaluation.

    Inverts psi degreewise: all proper faces carry the value except the
    1-st boundary face, which carries (-1)^(n+1) times the acted value
    (for n = 0 the roles of the two vertices give the same shape).
    """
    value = target.reduce(value)
    acted = target.act(value)
    sgn = _sign(n + 1)
    signed = target.reduce(tuple(sgn * x for x in acted))
    ambient = n + 1
    top = _top_mask(ambient)
    special = top & ~2 if n >= 1 else 1 << 1
    vals = {}
    for f in _proper_faces(ambient):
        vals[f] = signed if f == special else value
    return FAlgElement.from_face_values(target, n, vals)


def psi_is_bijective(target, n):
    """Degreewise bijectivity of psi onto the target, by enumeration."""
    group = normalized_group(target, n)
    images = set()
    count = 0
    for el in group.elements():
        if not el.is_normalized():
            return False
        images.add(target.reduce(el.psi_value()))
        count += 1
    target_elems = set(target.elements())
    return count == len(target_elems) and images == target_elems
