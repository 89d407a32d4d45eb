"""The fixed 20-attribute vocabulary and attribute-vector helpers.

Ground-truth vectors are binary 0/1. Manipulation values may leave [0, 1];
unknown attributes default to the neutral value 0.5.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractError

ATTRIBUTE_NAMES: tuple[str, ...] = (
    "Bald",
    "Bangs",
    "Big_Nose",
    "Black_Hair",
    "Blond_Hair",
    "Brown_Hair",
    "Eyeglasses",
    "Gray_Hair",
    "Heavy_Makeup",
    "Male",
    "Mouth_Open",
    "Mustache",
    "Narrow_Eyes",
    "No_Beard",
    "Pale_Skin",
    "Smiling",
    "Straight_Hair",
    "Wavy_Hair",
    "Wearing_Lipstick",
    "Young",
)

NUM_ATTRIBUTES = len(ATTRIBUTE_NAMES)
NEUTRAL_VALUE = 0.5

_INDEX = {name: i for i, name in enumerate(ATTRIBUTE_NAMES)}


def attribute_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ContractError(f"unknown attribute name: {name!r}") from None


def neutral_vector() -> np.ndarray:
    """All-0.5 vector used when ground-truth attributes are unknown."""
    return np.full(NUM_ATTRIBUTES, NEUTRAL_VALUE, dtype=np.float32)


def complete_vector(values=None) -> np.ndarray:
    """Build a full-length attribute vector from partial input.

    Accepts None (all neutral), a mapping name -> value, or a full-length
    sequence. Missing names default to 0.5; values outside [0, 1] are kept
    verbatim (manipulation above 1 / below 0 is an intended use).
    """
    if values is None:
        return neutral_vector()
    if isinstance(values, dict):
        vec = neutral_vector()
        for name, value in values.items():
            vec[attribute_index(name)] = float(value)
        return vec
    arr = np.asarray(values, dtype=np.float32)
    if arr.shape != (NUM_ATTRIBUTES,):
        raise ContractError(
            f"attribute vector must have length {NUM_ATTRIBUTES}, got shape {arr.shape}"
        )
    return arr


def as_attribute_batch(values) -> np.ndarray:
    """Validate a (B, 20) batch of attribute vectors."""
    arr = np.asarray(values, dtype=np.float32)
    if arr.ndim != 2 or arr.shape[1] != NUM_ATTRIBUTES:
        raise ContractError(
            f"attribute batch must have shape (B, {NUM_ATTRIBUTES}), got {arr.shape}"
        )
    return arr
