import os
from dataclasses import dataclass, field
from dotenv import load_dotenv
from core.types import *

load_dotenv()

QMONO_PRECISION = int(os.getenv("QMONO_PRECISION", "256"))
QMONO_TOLERANCE_EXP = int(os.getenv("QMONO_TOLERANCE_EXP", "40"))
QMONO_BACKEND = os.getenv("QMONO_BACKEND", "symbolic")
QMONO_SYMBOLIC_KMAX = int(os.getenv("QMONO_SYMBOLIC_KMAX", "8"))
QMONO_LOG_LEVEL = os.getenv("QMONO_LOG_LEVEL", "WARNING")
QMONO_CONSTANTS = os.getenv("QMONO_CONSTANTS", "mpmath")
QMONO_FIXTURES_PATH = os.getenv(
    "QMONO_FIXTURES_PATH", os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
)

MIN_PRECISION = 64
# symbolic ring carries zeta(3) .. zeta(MAX_ZETA)
MAX_ZETA = 21

STOKES_TABLES_FIXTURE = "stokes_tables.json"
P2_COLLECTIONS_FIXTURE = "p2_collections.json"
G24_CONNECTION_FIXTURE = "g24_connection.json"


@dataclass
class PrecisionCfg:
    bits: int = QMONO_PRECISION
    toleranceExp: int = QMONO_TOLERANCE_EXP


@dataclass
class VerifyCfg:
    kmax: int = 5  # projective spaces P^{k-1} with k <= kmax
    gmax: int = 5  # Grassmannians G(r,k) with k <= gmax
    trials: int = 100
    seed: int = 20180806
    precision: PrecisionCfg = field(default_factory=PrecisionCfg)


@dataclass
class CliCfg:
    format: str = OutputFormat.JSON.value
    backend: str = QMONO_BACKEND
    precision: int = QMONO_PRECISION
