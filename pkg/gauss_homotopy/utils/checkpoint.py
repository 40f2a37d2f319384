"""
Simple checkpoint / resume support for batch runs.
Stores the records produced so far so an interrupted batch can be resumed.
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


def _checkpoint_path(output_path: str) -> str:
    """Derive the checkpoint filename from the batch output path."""
    return output_path + ".checkpoint.json"


def save_checkpoint(output_path: str, records: List[str], line_idx: int, source: str) -> None:
    """Save current progress to a checkpoint file.

    Args:
        output_path: The final output path (checkpoint is stored alongside it).
        records: Serialized output records produced so far, one per input line.
        line_idx: The *next* input line index to process on resume.
        source: The batch input file, so a checkpoint is not reused for another input.
    """
    cp_path = _checkpoint_path(output_path)
    data = {
        "records": records,
        "line_idx": line_idx,
        "source": source,
    }
    tmp_path = cp_path + ".tmp"
    with open(tmp_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
    os.replace(tmp_path, cp_path)
    logger.debug("Checkpoint saved: %d records, line_idx=%d -> %s", len(records), line_idx, cp_path)


def load_checkpoint(output_path: str) -> Optional[Dict[str, Any]]:
    """Load a checkpoint file if it exists.

    Returns:
        A dict with keys ``records`` (list), ``line_idx`` (int) and ``source``,
        or None if no usable checkpoint exists.
    """
    cp_path = _checkpoint_path(output_path)
    if not os.path.exists(cp_path):
        return None

    try:
        with open(cp_path, "r", encoding="utf-8") as f:
            data = json.load(f)
        if len(data["records"]) != data["line_idx"]:
            raise KeyError("records")
        logger.info("Loaded checkpoint from %s (%d records)", cp_path, data["line_idx"])
        return data
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        logger.warning("Corrupt checkpoint file %s: %s", cp_path, e)
        return None


def remove_checkpoint(output_path: str) -> None:
    cp_path = _checkpoint_path(output_path)
    if os.path.exists(cp_path):
        os.remove(cp_path)
        logger.debug("Removed checkpoint %s", cp_path)
