import json
from fractions import Fraction

import mpmath
import pytest

from core.approx import ApproxComplex
from core.errors import ArgumentError
from core.matrices import exactly_equal, max_residual
from core.sym_scalar import SymScalar
from core.types import Space
from grassmannian.monodromy import grass_monodromy
from projective.canonical import chamber_data
from serialization import (
    dump_monodromy,
    load_monodromy,
    monodromy_to_json,
    scalar_from_wire,
    scalar_to_wire,
    serialize_to_json,
)


def test_scalar_wire_forms(symbolic):
    assert scalar_to_wire(3) == 3
    assert scalar_to_wire(Fraction(-1, 2)) == "-1/2"
    assert scalar_from_wire("-1/2", symbolic) == Fraction(-1, 2)
    x = SymScalar.gamma() * SymScalar.rt()
    assert scalar_from_wire(scalar_to_wire(x), symbolic) == x


def test_booleans_are_not_scalars():
    with pytest.raises(ArgumentError):
        scalar_to_wire(True)


def test_symbolic_data_survives_the_wire(symbolic):
    data = chamber_data(3, 1, symbolic)
    restored = load_monodromy(dump_monodromy(data))
    assert restored.S == data.S
    assert restored.mu == data.mu
    assert restored.meta == data.meta
    assert exactly_equal(restored.C, data.C)


def test_numeric_data_keeps_precision(numeric):
    data = chamber_data(2, 0, numeric)
    restored = load_monodromy(dump_monodromy(data))
    assert restored.backend.precision == numeric.precision
    assert any(isinstance(x, ApproxComplex) for x in restored.C.flat)
    assert max_residual(restored.C, data.C, numeric) < mpmath.mpf(2) ** -200


def test_grassmannian_meta(symbolic):
    payload = monodromy_to_json(grass_monodromy(2, 3, 0, backend=symbolic))
    assert payload["meta"]["space"] == Space.GRASSMANNIAN
    restored = load_monodromy(json.dumps(payload, default=lambda e: e.value))
    assert restored.meta.space == Space.GRASSMANNIAN
    assert restored.meta.r == 2


@pytest.mark.parametrize("text", ["not json", "{}", '{"backend": "symbolic", "precision": 256}'])
def test_malformed_data(text):
    with pytest.raises(ArgumentError):
        load_monodromy(text)


def test_serialize_records():
    text = serialize_to_json({"space": Space.PROJECTIVE, "value": Fraction(1, 3)})
    assert json.loads(text) == {"space": "P", "value": "1/3"}


def test_connection_documents_are_unwrapped(symbolic):
    data = chamber_data(3, 0, symbolic)
    document = {"command": "connection", "format": "json", "backend": "symbolic", "precision": 256}
    document["payload"] = monodromy_to_json(data)
    restored = load_monodromy(serialize_to_json(document))
    assert restored.S == data.S
    assert exactly_equal(restored.C, data.C)
