# superal/core/json_safety.py
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from superal.core.schemas import VerificationReport

M = TypeVar("M", bound=BaseModel)


def try_parse_and_validate(model: Type[M], text: Union[str, bytes]) -> Tuple[Optional[M], Optional[str]]:
    """
    Return (instance, error_message). If parse+validate ok, error_message is None.
    Accepts the raw bytes produced by emit_report as well as text.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            return None, f"JSON parse error: {e}"
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        return None, f"JSON parse error: {e}"
    try:
        return model.model_validate(data), None
    except ValidationError as ve:
        return None, f"Validation error: {ve}"


def load_report(path: Path) -> VerificationReport:
    """Read a report written with --out; raises ValueError with the path on bad content."""
    report, err = try_parse_and_validate(VerificationReport, path.read_bytes())
    if err is not None:
        raise ValueError(f"{path}: {err}")
    return report
