from enum import Enum, IntEnum


class Backend(str, Enum):
    SYMBOLIC = "symbolic"
    NUMERIC = "numeric"


class Sign(IntEnum):
    MINUS = -1
    PLUS = 1


class Space(str, Enum):
    PROJECTIVE = "P"
    GRASSMANNIAN = "G"


class MutationDir(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class DualKind(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    GEOMETRIC = "geometric"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"
    LATEX = "latex"


class Suite(str, Enum):
    CONSTRAINTS = "constraints"
    QUASI = "quasi"
    MARKOV = "markov"
    TABLES = "tables"
    EXTRAS = "extras"
    ALL = "all"


class Constraint(str, Enum):
    C3 = "c3"  # S unipotent upper triangular
    C4 = "c4"  # C S^T S^-1 C^-1 = M0
    C5 = "c5"  # S = C^-1 e^{-pi i R} e^{-pi i mu} eta^-1 C^-T
    C6 = "c6"  # S^T = C^-1 e^{pi i R} e^{pi i mu} eta^-1 C^-T


class BundleKind(str, Enum):
    LINE = "O"
    TANGENT = "T"
    COTANGENT = "Omega"
