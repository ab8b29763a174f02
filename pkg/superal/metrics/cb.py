# superal/metrics/cb.py
"""
JSONL progress sink for verification runs, enabled by METRICS_JSON.

verify-al emits ``verify_al_start`` with the run config, one ``chunk`` per
finished lexicographic chunk (index, tuples checked, nonzero count) and
``verify_al_end`` with status, tuple count and elapsed time. Each record is
one line: ``{"ts": ..., "event": ..., **payload}``.
"""
from __future__ import annotations
from pathlib import Path
import json, os, time
from typing import Callable, Optional, Dict, Any

from superal.core.config import settings


def build_metrics_cb() -> Optional[Callable[..., None]]:
    out = os.getenv("METRICS_JSON") or settings.metrics_json
    if not out:
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)

    def _cb(*args, **kwargs) -> None:
        """progress(event, payload) as the chunk runner calls it; a bare payload dict or keywords also work."""
        event = "event"
        payload: Dict[str, Any] = {}

        if len(args) == 2 and isinstance(args[0], str) and isinstance(args[1], dict):
            event, payload = args[0], args[1]
        elif len(args) == 1 and isinstance(args[0], dict):
            payload = args[0]
        elif "event" in kwargs or "payload" in kwargs:
            event = kwargs.get("event", event)
            payload = kwargs.get("payload", payload)

        rec = {"ts": time.time(), "event": event}
        rec.update(payload)
        with path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(rec, ensure_ascii=False, default=str) + "\n")
    return _cb
