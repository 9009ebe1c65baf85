"""Monodromy data of P^{k-1} at the small quantum locus: canonical form, chamber 0 and chamber walks."""
from dataclasses import dataclass

from sympy import Matrix

from cohomology.classes import KClass, class_matrix, d_minus, eta_matrix, mu_operator, r_operator
from cohomology.ktheory import bundle_kclass, collection_gram
from core.backend import ScalarBackend, check_symbolic_size, get_backend
from core.braid import BraidWord
from core.errors import ArgumentError
from core.matrices import binomial
from core.types import BundleKind, MutationDir, Space
from monodromy.actions import braid_act, braid_stokes, sign_act
from monodromy.data import MonodromyData, MonodromyMeta
from mukai.lattice import ExceptionalBasisState, mutation_matrix, sign_gram
from storage.file_manager import p2_collection_rows
from logger import get_logger

logger = get_logger()


# ----------------------------------------------------------------------
# EXCEPTIONAL OBJECTS
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class ExceptionalObject:
    """O(twist), Lambda^p T(twist) or Lambda^p Omega(twist) on P^{k-1}."""

    kind: BundleKind = BundleKind.LINE
    p: int = 0
    twist: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", BundleKind(self.kind))

    def kclass(self, k: int) -> KClass:
        return bundle_kclass(self.kind, self.p, self.twist, k)

    def __str__(self):
        twist = f"({self.twist})" if self.twist else ""
        if self.kind == BundleKind.LINE:
            return f"O{twist}"
        base = "T" if self.kind == BundleKind.TANGENT else "Omega"
        power = "" if self.p == 1 else f"Lambda^{self.p}"
        return f"{power}{base}{twist}"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "p": self.p, "twist": self.twist}

    @classmethod
    def from_json(cls, data: dict) -> "ExceptionalObject":
        return cls(BundleKind(data["kind"]), int(data.get("p", 0)), int(data.get("twist", 0)))


def mutate_classes(classes: list[KClass], i: int, direction: MutationDir) -> list[KClass]:
    """Mutates the pair at (i-1, i) with the change of basis used on Gram matrices."""
    M = mutation_matrix(collection_gram(classes), i, direction)
    n = len(classes)
    out = []
    for b in range(n):
        total = KClass.zero(classes[0].k)
        for a in range(n):
            if M[a, b]:
                total = total + int(M[a, b]) * classes[a]
        out.append(total)
    return out


# ----------------------------------------------------------------------
# CANONICAL FORM
# ----------------------------------------------------------------------
def canonical_stokes(k: int) -> Matrix:
    """s_ij = (-1)^{j-i} C(k, j-i), the inverse of the Beilinson Gram matrix."""
    return Matrix(k, k, lambda i, j: (-1) ** (j - i) * binomial(k, j - i) if j >= i else 0)


def canonical_data(k: int, backend: ScalarBackend = None) -> MonodromyData:
    """S in canonical form and C with columns Dminus([O(j)]), j = 0..k-1."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    backend = backend or get_backend()
    check_symbolic_size(backend, k)
    C = class_matrix([d_minus(KClass.basis(k, j), backend) for j in range(k)])
    meta = MonodromyMeta(Space.PROJECTIVE, k, 1, None, None, "canonical")
    return MonodromyData(mu_operator(k), r_operator(k), eta_matrix(k), canonical_stokes(k), C, backend, meta)


def positive_form(data: MonodromyData) -> MonodromyData:
    """Flips odd columns: the canonical S becomes entrywise non-negative."""
    return sign_act(data, tuple((-1) ** j for j in range(data.n)))


def beilinson_braid(k: int) -> BraidWord:
    """bb' = b12 (b34 b23 b12) ... for k even, (b23 b12)(b45 b34 b23 b12) ... for k odd."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    tops = range(1, k, 2) if k % 2 == 0 else range(2, k, 2)
    indices = []
    for top in tops:
        indices.extend(range(top, 0, -1))
    return BraidWord.of(k, *indices)


def omega_braids(k: int) -> tuple[BraidWord, BraidWord]:
    """(w1, w2): products of the odd and even letters, swapped for k odd."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    odd = BraidWord.of(k, *range(1, k, 2))
    even = BraidWord.of(k, *range(2, k, 2))
    return (odd, even) if k % 2 == 0 else (even, odd)


def crossing_word(k: int, m: int) -> BraidWord:
    """Braid of the transition from chamber m to chamber m+1."""
    w1, w2 = omega_braids(k)
    return w1 if m % 2 == 0 else w2


def rotation_word(k: int) -> BraidWord:
    """Word of a full rotation phi -> phi + 2 pi: 2k crossings."""
    w1, w2 = omega_braids(k)
    return (w1 * w2) ** k


# ----------------------------------------------------------------------
# CHAMBER 0 AND WALKS
# ----------------------------------------------------------------------
def chamber0_objects(k: int) -> list[ExceptionalObject]:
    """Collection attached to chamber 0 at t = 0."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    objects = []
    if k % 2 == 0:
        half = k // 2
        for j in range(half):
            objects.append(ExceptionalObject(BundleKind.LINE, 0, half + j))
            objects.append(ExceptionalObject(BundleKind.TANGENT, 2 * j + 1, half - 1 - j))
    else:
        half = (k - 1) // 2
        objects.append(ExceptionalObject(BundleKind.LINE, 0, half))
        for j in range(1, half + 1):
            objects.append(ExceptionalObject(BundleKind.LINE, 0, half + j))
            objects.append(ExceptionalObject(BundleKind.TANGENT, 2 * j, half - j))
    return objects


def chamber0_data(k: int, backend: ScalarBackend = None) -> tuple[MonodromyData, list[ExceptionalObject]]:
    data = braid_act(positive_form(canonical_data(k, backend)), beilinson_braid(k).inverse())
    meta = MonodromyMeta(Space.PROJECTIVE, k, 1, 0, None, "chamber 0")
    logger.debug(f"[CHAMBER] k={k}: chamber 0 reached by the inverse of {beilinson_braid(k)}")
    return data.with_(meta=meta), chamber0_objects(k)


def _step(data: MonodromyData, m: int, forward: bool) -> MonodromyData:
    k = data.n
    if forward:
        out = braid_act(data, crossing_word(k, m))
        target = m + 1
    else:
        out = braid_act(data, crossing_word(k, m - 1).inverse())
        target = m - 1
    meta = data.meta
    return out.with_(meta=MonodromyMeta(meta.space, meta.k, meta.r, target, meta.slope, meta.note))


def chamber_walk(k: int, data: MonodromyData, crossings: int) -> list[MonodromyData]:
    """Data in the chambers met while the slope turns; negative ``crossings`` turn clockwise.

    The first element is ``data`` itself.
    """
    if data.n != k:
        raise ArgumentError(f"data of size {data.n} is not P^{k - 1} data")
    m = data.meta.chamber or 0
    out = [data]
    for _ in range(abs(crossings)):
        data = _step(data, m, crossings > 0)
        m = data.meta.chamber
        out.append(data)
    logger.debug(f"[CHAMBER] k={k}: walked {crossings} crossings to chamber {m}")
    return out


def chamber_data(k: int, m: int, backend: ScalarBackend = None) -> MonodromyData:
    """Data in chamber m; negative m walks clockwise with the inverse words."""
    data, _ = chamber0_data(k, backend)
    return chamber_walk(k, data, m)[-1]


# ----------------------------------------------------------------------
# STOKES MATRICES ONLY
# ----------------------------------------------------------------------
def chamber0_stokes(k: int) -> Matrix:
    signs = tuple((-1) ** j for j in range(k))
    return braid_stokes(sign_gram(canonical_stokes(k), signs), beilinson_braid(k).inverse())


def chamber_stokes(k: int, m: int) -> Matrix:
    """Stokes matrix of chamber m, same walk as chamber_data without C."""
    return braid_stokes(chamber0_stokes(k), walk_word(k, m))


def rotation_stokes(k: int, start: int = 0) -> list[Matrix]:
    """Stokes matrices of chambers start .. start + 2k - 1."""
    S = chamber_stokes(k, start)
    out = [S]
    for step in range(start, start + 2 * k - 1):
        S = braid_stokes(S, crossing_word(k, step))
        out.append(S)
    return out


# ----------------------------------------------------------------------
# COLLECTIONS
# ----------------------------------------------------------------------
def collection_labels(k: int, m: int = 0) -> list[ExceptionalObject]:
    """Named collection of chamber m: chamber 0 for every k, chambers 0..6 for P^2."""
    if k == 3 and 0 <= m <= 6:
        row = next((row for row in p2_collection_rows() if row.chamber == m), None)
        if row is None:
            raise ArgumentError(f"P^2 collection table has no chamber {m}")
        return [ExceptionalObject(item.kind, item.p, item.twist) for item in row.collection]
    if m == 0:
        return chamber0_objects(k)
    raise ArgumentError(f"no named collection for P^{k - 1} in chamber {m}; use collection_state")


def collection_classes(k: int, m: int = 0) -> list[KClass]:
    """K-classes of the chamber m collection, mutated from chamber 0 when no names exist."""
    if m == 0 or (k == 3 and 0 <= m <= 6):
        return [obj.kclass(k) for obj in collection_labels(k, m)]
    classes = [obj.kclass(k) for obj in chamber0_objects(k)]
    for letter in walk_word(k, m):
        direction = MutationDir.LEFT if letter.exp > 0 else MutationDir.RIGHT
        classes = mutate_classes(classes, letter.index, direction)
    return classes


def collection_state(k: int, m: int = 0) -> ExceptionalBasisState:
    """Basis state of the chamber 0 collection mutated along the walk to chamber m."""
    classes = [obj.kclass(k) for obj in chamber0_objects(k)]
    labels = tuple(str(obj) for obj in chamber0_objects(k))
    state = ExceptionalBasisState(k, collection_gram(classes), labels)
    return state.act(walk_word(k, m))


def walk_word(k: int, m: int) -> BraidWord:
    """Crossing words from chamber 0 to chamber m, inverted for m < 0."""
    word = BraidWord(k)
    if m >= 0:
        for step in range(m):
            word = word * crossing_word(k, step)
    else:
        for step in range(0, m, -1):
            word = word * crossing_word(k, step - 1).inverse()
    return word
