"""
Deterministic rendering of analyzer results: JSON, text tables, CSV
"""
import json
import math
from fractions import Fraction
from typing import Any, Dict, List

import pandas as pd

import config


def round_sig(x: float, digits: int = config.OUTPUT_SIGNIFICANT_DIGITS) -> float:
    if x is None or not math.isfinite(x):
        return x
    value = float(f"{x:.{digits}g}")
    return 0.0 if value == 0 else value


def spectrum_to_json(spectrum) -> List[Dict[str, Any]]:
    return [{'value': round_sig(value), 'mult': mult} for value, mult in spectrum.groups]


def _normalize(obj):
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {k: _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    return obj


def dump_json(result: Dict[str, Any]) -> str:
    return json.dumps(_normalize(result), indent=2) + '\n'


def dump_table(rows: List[Dict[str, Any]], output: str) -> str:
    frame = pd.DataFrame([_normalize(r) for r in rows])
    if output == 'csv':
        return frame.to_csv(index=False)
    if frame.empty:
        return '(no rows)\n'
    return frame.to_string(index=False) + '\n'


def dump_text(result: Dict[str, Any]) -> str:
    """key: value lines, nested dicts indented, lists of records as tables"""
    lines = []

    def emit(obj, indent):
        pad = '  ' * indent
        for key, value in obj.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                emit(value, indent + 1)
            elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                lines.append(f"{pad}{key}:")
                table = pd.DataFrame(value).to_string(index=False)
                lines.extend(f"{pad}  {row}" for row in table.splitlines())
            else:
                lines.append(f"{pad}{key}: {value}")

    emit(_normalize(result), 0)
    return '\n'.join(lines) + '\n'
