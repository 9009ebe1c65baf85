"""JSON wire forms: scalars, integer matrices, braid words and monodromy data."""
import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction

from dacite import Config, from_dict
import mpmath
import numpy as np
from sympy import Matrix

from core.approx import ApproxComplex
from core.backend import ScalarBackend, get_backend
from core.braid import BraidWord
from core.errors import ArgumentError
from core.sym_scalar import SymScalar
from core.types import Backend, Space
from monodromy.data import MonodromyData, MonodromyMeta


# ----------------------------------------------------------------------
# SCALARS AND MATRICES
# ----------------------------------------------------------------------
def scalar_to_wire(x):
    if isinstance(x, bool):
        raise ArgumentError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, SymScalar):
        return {"terms": x.to_json()}
    if isinstance(x, ApproxComplex):
        return x.to_json()
    raise ArgumentError(f"no wire form for {type(x).__name__}")


def scalar_from_wire(value, backend: ScalarBackend):
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if "terms" in value:
        return backend.scalar(SymScalar.from_json(value["terms"]))
    return backend.scalar(ApproxComplex.from_json(value))


def int_matrix_to_wire(M: Matrix) -> list[list[int]]:
    return [[int(x) for x in M.row(i)] for i in range(M.rows)]


def object_matrix_to_wire(M: np.ndarray) -> list[list]:
    return [[scalar_to_wire(x) for x in row] for row in M.tolist()]


def object_matrix_from_wire(rows, backend: ScalarBackend) -> np.ndarray:
    return np.array([[scalar_from_wire(x, backend) for x in row] for row in rows], dtype=object)


class QmonoEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Matrix):
            return int_matrix_to_wire(obj)
        if isinstance(obj, np.ndarray):
            return object_matrix_to_wire(obj)
        if isinstance(obj, (Fraction, SymScalar, ApproxComplex)):
            return scalar_to_wire(obj)
        if isinstance(obj, (BraidWord, mpmath.mpf, mpmath.mpc)):
            return str(obj)
        if hasattr(obj, "to_json"):
            return obj.to_json()
        return json.JSONEncoder.default(self, obj)


def serialize_to_json(data_object) -> str:
    """Converts a dataclass record (or anything the encoder knows) to a JSON string."""
    if hasattr(data_object, "to_json"):
        payload = data_object.to_json()
    elif is_dataclass(data_object):
        payload = asdict(data_object)
    else:
        payload = data_object
    return json.dumps(payload, indent=4, cls=QmonoEncoder)


# ----------------------------------------------------------------------
# MONODROMY DATA
# ----------------------------------------------------------------------
def monodromy_to_json(data: MonodromyData) -> dict:
    return {
        "backend": data.backend.kind.value,
        "precision": data.backend.precision,
        "meta": asdict(data.meta),
        "mu": [str(m) for m in data.mu],
        "R": int_matrix_to_wire(data.R),
        "eta": int_matrix_to_wire(data.eta),
        "S": int_matrix_to_wire(data.S),
        "C": object_matrix_to_wire(data.C),
    }


def monodromy_from_json(payload: dict) -> MonodromyData:
    try:
        backend = get_backend(Backend(payload["backend"]), int(payload["precision"]))
        meta = from_dict(MonodromyMeta, payload.get("meta", {}), config=Config(cast=[Space]))
        return MonodromyData(
            tuple(Fraction(m) for m in payload["mu"]),
            Matrix(payload["R"]),
            Matrix(payload["eta"]),
            Matrix(payload["S"]),
            object_matrix_from_wire(payload["C"], backend),
            backend,
            meta,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError(f"malformed monodromy data: {exc}") from exc


def dump_monodromy(data: MonodromyData) -> str:
    return json.dumps(monodromy_to_json(data), indent=4, cls=QmonoEncoder)


def load_monodromy(text: str) -> MonodromyData:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"monodromy data is not JSON: {exc}") from exc
    # whole output documents of the connection command are accepted too
    if isinstance(payload, dict) and "command" in payload and isinstance(payload.get("payload"), dict):
        payload = payload["payload"]
    return monodromy_from_json(payload)
