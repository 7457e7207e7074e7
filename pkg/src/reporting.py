"""
Output rendering shared by the command-line commands

Every command produces a JSON envelope {schema_version, command, config,
result} or a CSV table preceded by "# key=value" header lines. Complex
numbers cross this boundary as "a+bi" strings; floats are written with 17
significant digits so they round-trip.
"""

import csv
import dataclasses
import io
import json
import logging
import math
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

import jsonschema
import numpy as np
from pydantic import BaseModel

from config.settings import get_settings

from .errors import InputError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

ENVELOPE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema_version", "command", "config", "result"],
    "properties": {
        "schema_version": {"type": "string"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "result": {"type": ["object", "array"]},
    },
    "additionalProperties": False,
}


def format_float(x: float) -> str:
    return FLOAT_FORMAT % x


def format_complex(z: complex) -> str:
    """
    "a+bi" with 17 significant digits per part

    Example: format_complex(3j) == "0+3i"
    """
    z = complex(z)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}i"


def parse_complex(text: str) -> complex:
    """
    Parse "a+bi", "a-bi", "bi", "a" (a trailing j is accepted for i)

    Raises:
        InputError: If the text is not a complex number
    """
    cleaned = str(text).strip().replace(" ", "")
    if cleaned.endswith("i"):
        cleaned = cleaned[:-1] + "j"
    try:
        value = complex(cleaned)
    except ValueError:
        raise InputError(f"Not a complex number: {text!r}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise InputError(f"Complex number must be finite: {text!r}")
    return value


def make_json_safe(obj: Any) -> Any:
    """
    Recursively convert models, numpy values, fractions and complex numbers
    into plain JSON types
    """
    if isinstance(obj, BaseModel):
        obj = obj.model_dump()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        obj = dataclasses.asdict(obj)

    if isinstance(obj, dict):
        return {str(k): make_json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [make_json_safe(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [make_json_safe(v) for v in obj.tolist()]

    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return format_complex(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def envelope(command: str, config: Dict[str, Any], result: Any) -> Dict[str, Any]:
    """The JSON payload of one command run"""
    return {
        "schema_version": get_settings().schema_version,
        "command": command,
        "config": make_json_safe(config),
        "result": make_json_safe(result),
    }


def validate_payload(payload: Dict[str, Any]) -> None:
    """
    Check a payload against the envelope schema

    Raises:
        jsonschema.ValidationError: If the payload does not conform
    """
    jsonschema.validate(instance=payload, schema=ENVELOPE_SCHEMA)


def render_json(command: str, config: Dict[str, Any], result: Any) -> str:
    payload = envelope(command, config, result)
    validate_payload(payload)
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=True) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return format_complex(value)
    return str(value)


def _flatten(prefix: str, value: Any, out: List[tuple]) -> None:
    value = make_json_safe(value) if isinstance(value, BaseModel) else value
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, (list, tuple, np.ndarray)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, value))


def render_csv(
    command: str,
    config: Dict[str, Any],
    result: Any = None,
    columns: Optional[Sequence[str]] = None,
    rows: Optional[Iterable[Sequence[Any]]] = None,
) -> str:
    """
    CSV output with "# key=value" header lines

    With columns/rows the table is written as given and scalar fields of
    result go to the header; otherwise result is flattened into
    (field, value) rows.
    """
    buf = io.StringIO()
    buf.write(f"# schema_version={get_settings().schema_version}\n")
    buf.write(f"# command={command}\n")
    for key, value in config.items():
        buf.write(f"# {key}={_cell(value)}\n")

    writer = csv.writer(buf, lineterminator="\n")
    if columns is not None:
        if isinstance(result, dict):
            for key, value in result.items():
                if not isinstance(value, (dict, list, tuple, np.ndarray, BaseModel)):
                    buf.write(f"# {key}={_cell(value)}\n")
        writer.writerow(columns)
        for row in rows or []:
            writer.writerow([_cell(v) for v in row])
    else:
        flat: List[tuple] = []
        _flatten("", result, flat)
        writer.writerow(["field", "value"])
        for key, value in flat:
            writer.writerow([key, _cell(value)])
    return buf.getvalue()


def render(
    fmt: str,
    command: str,
    config: Dict[str, Any],
    result: Any,
    columns: Optional[Sequence[str]] = None,
    rows: Optional[Iterable[Sequence[Any]]] = None,
) -> str:
    """Dispatch to render_json or render_csv"""
    if fmt == "json":
        return render_json(command, config, result)
    if fmt == "csv":
        return render_csv(command, config, result, columns=columns, rows=rows)
    raise InputError(f"Unknown output format: {fmt}")
