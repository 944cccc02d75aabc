"""Deterministic JSON rendering of results and suite reports."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any


def render_json(payload: Any) -> str:
    """Sorted keys, fixed indent and no timestamps, so equal payloads give equal bytes."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(payload: Any, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_json(payload), encoding="utf-8")
