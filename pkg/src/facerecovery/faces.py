"""Procedural face source: parametric cartoon faces with exact attribute labels.

Each identity seed fixes the geometry (face shape, eye spacing, skin hue, ...)
and a consistent binary attribute set. Attributes with a visual meaning
(Eyeglasses, Black_Hair, Smiling, ...) are rendered literally, so attribute
ground truth is exact by construction and attribute conditioning is testable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attributes import ATTRIBUTE_NAMES, NUM_ATTRIBUTES

# attribute indices used by the renderer
_A = {name: i for i, name in enumerate(ATTRIBUTE_NAMES)}

_HAIR_COLORS = {
    "black": (0.10, 0.09, 0.09),
    "blond": (0.89, 0.77, 0.42),
    "brown": (0.42, 0.26, 0.14),
    "gray": (0.65, 0.65, 0.66),
    "auburn": (0.55, 0.20, 0.10),
}


@dataclass(frozen=True)
class FaceSpec:
    """Identity geometry plus the attribute vector it renders."""

    identity_id: str
    seed: int
    geometry: dict
    attributes: np.ndarray  # (20,) float32, values exactly 0/1

    def attribute(self, name: str) -> float:
        return float(self.attributes[_A[name]])


def sample_face_spec(identity_index: int, seed: int) -> FaceSpec:
    """Draw one identity's geometry and binary attribute set."""
    rng = np.random.default_rng([seed, identity_index])
    a = np.zeros(NUM_ATTRIBUTES, dtype=np.float32)

    male = rng.random() < 0.5
    young = rng.random() < 0.7
    bald = male and rng.random() < 0.15
    hair_color = rng.choice(
        ["black", "blond", "brown", "gray", "auburn"],
        p=[0.28, 0.18, 0.24, 0.14, 0.16],
    )
    if not young and rng.random() < 0.5:
        hair_color = "gray"
    hair_style = rng.choice(["straight", "wavy", "short"], p=[0.38, 0.38, 0.24])
    if male and rng.random() < 0.6:
        hair_style = "short"
    bangs = (not bald) and rng.random() < 0.3
    mustache = male and rng.random() < 0.4
    beard = male and rng.random() < 0.35
    makeup = (not male) and rng.random() < 0.55
    lipstick = (not male) and (makeup or rng.random() < 0.3)

    a[_A["Bald"]] = bald
    a[_A["Bangs"]] = bangs
    a[_A["Big_Nose"]] = rng.random() < 0.3
    if not bald:
        a[_A["Black_Hair"]] = hair_color == "black"
        a[_A["Blond_Hair"]] = hair_color == "blond"
        a[_A["Brown_Hair"]] = hair_color == "brown"
        a[_A["Gray_Hair"]] = hair_color == "gray"
    a[_A["Eyeglasses"]] = rng.random() < 0.35
    a[_A["Heavy_Makeup"]] = makeup
    a[_A["Male"]] = male
    a[_A["Mouth_Open"]] = rng.random() < 0.4
    a[_A["Mustache"]] = mustache
    a[_A["Narrow_Eyes"]] = rng.random() < 0.3
    a[_A["No_Beard"]] = not beard
    a[_A["Pale_Skin"]] = rng.random() < 0.35
    a[_A["Smiling"]] = rng.random() < 0.5
    a[_A["Straight_Hair"]] = (not bald) and hair_style == "straight"
    a[_A["Wavy_Hair"]] = (not bald) and hair_style == "wavy"
    a[_A["Wearing_Lipstick"]] = lipstick
    a[_A["Young"]] = young

    geometry = {
        "face_rx": rng.uniform(0.26, 0.33),
        "face_ry": rng.uniform(0.33, 0.41),
        "jaw_width": rng.uniform(1.04, 1.14) if male else rng.uniform(0.92, 1.02),
        "eye_y": rng.uniform(0.40, 0.46),
        "eye_dx": rng.uniform(0.12, 0.17),
        "eye_r": rng.uniform(0.035, 0.05),
        "iris_shade": rng.uniform(0.05, 0.35),
        "nose_len": rng.uniform(0.07, 0.10),
        "mouth_y": rng.uniform(0.66, 0.72),
        "mouth_w": rng.uniform(0.08, 0.13),
        "hair_volume": rng.uniform(1.08, 1.22),
        "hair_length": rng.uniform(0.74, 0.92),
        "skin_tone": rng.uniform(0.0, 1.0),
        "bg_shade": rng.uniform(0.0, 1.0),
        "hair_color": hair_color,
        "brow_th": rng.uniform(0.010, 0.020),
    }
    return FaceSpec(
        identity_id=f"id{identity_index:04d}",
        seed=seed,
        geometry=geometry,
        attributes=a,
    )


def _soft_ellipse(yy, xx, cy, cx, ry, rx, softness=1.2):
    # quadratic level set with ~1px soft edge, clipped to [0,1]
    d = ((xx - cx) / max(rx, 1e-6)) ** 2 + ((yy - cy) / max(ry, 1e-6)) ** 2
    edge = softness * 2.0 / max(min(rx, ry), 1e-6)
    return np.clip(0.5 + (1.0 - d) / edge, 0.0, 1.0)


def _paint(img, mask, color, alpha=1.0):
    m = (mask * alpha)[..., None]
    img *= 1.0 - m
    img += m * np.asarray(color, dtype=np.float64)


def render_face(spec: FaceSpec, size: int = 64) -> np.ndarray:
    """Render the aligned real-face image for a FaceSpec.

    Returns an H x W x 3 float64 array in [0, 1].
    """
    g = spec.geometry
    S = float(size)
    ys, xs = np.mgrid[0:size, 0:size]
    yy = ys.astype(np.float64) + 0.5
    xx = xs.astype(np.float64) + 0.5

    pale = spec.attribute("Pale_Skin") > 0.5
    tone = g["skin_tone"]
    if pale:
        skin = np.array([0.96, 0.88, 0.80]) - 0.04 * tone
    else:
        dark = np.array([0.55, 0.38, 0.24])
        light = np.array([0.88, 0.70, 0.55])
        skin = dark + (light - dark) * tone
    hair = np.array(_HAIR_COLORS[g["hair_color"]])
    if spec.attribute("Bald") > 0.5:
        hair = skin * 0.97

    bg = np.array([0.55, 0.62, 0.70]) + 0.25 * (g["bg_shade"] - 0.5)
    img = np.ones((size, size, 3), dtype=np.float64) * bg

    cx = 0.5 * S
    cy = 0.53 * S
    face_rx = g["face_rx"] * S
    face_ry = g["face_ry"] * S

    # hair drawn behind the face: crown plus side strands
    if spec.attribute("Bald") < 0.5:
        crown = _soft_ellipse(
            yy, xx, cy - 0.10 * S, cx, face_ry * g["hair_volume"] * 0.92,
            face_rx * g["hair_volume"],
        )
        _paint(img, crown, hair)
        if spec.attribute("Straight_Hair") > 0.5 or spec.attribute("Wavy_Hair") > 0.5:
            length = g["hair_length"] * S
            half_w = face_rx * 1.12
            if spec.attribute("Wavy_Hair") > 0.5:
                edge = half_w + 0.03 * S * np.sin(yy * 2.0 * np.pi / (0.16 * S))
            else:
                edge = np.full_like(yy, half_w)
            band = (np.abs(xx - cx) < edge) & (np.abs(xx - cx) > face_rx * 0.86)
            band &= (yy > cy - 0.18 * S) & (yy < cy - 0.18 * S + length)
            _paint(img, band.astype(np.float64), hair)

    face = _soft_ellipse(yy, xx, cy, cx, face_ry, face_rx * g["jaw_width"])
    _paint(img, face, skin)

    # forehead wrinkles mark an older face
    if spec.attribute("Young") < 0.5:
        for k in (0.30, 0.345):
            line = (np.abs(yy - k * S) < 0.6) & (np.abs(xx - cx) < face_rx * 0.55)
            _paint(img, line.astype(np.float64) * face, skin * 0.72)

    if spec.attribute("Bangs") > 0.5 and spec.attribute("Bald") < 0.5:
        fringe = _soft_ellipse(yy, xx, cy - 0.30 * S, cx, 0.16 * S, face_rx * 0.95)
        _paint(img, fringe, hair)

    eye_y = g["eye_y"] * S
    eye_dx = g["eye_dx"] * S
    eye_rx = g["eye_r"] * S * 1.35
    eye_ry = g["eye_r"] * S * (0.45 if spec.attribute("Narrow_Eyes") > 0.5 else 1.0)

    if spec.attribute("Heavy_Makeup") > 0.5:
        for sx in (-1.0, 1.0):
            cheek = _soft_ellipse(
                yy, xx, eye_y + 0.17 * S, cx + sx * eye_dx * 1.15, 0.045 * S, 0.06 * S
            )
            _paint(img, cheek, (0.93, 0.55, 0.58), alpha=0.55)
            shadow = _soft_ellipse(
                yy, xx, eye_y - 0.045 * S, cx + sx * eye_dx, 0.026 * S, eye_rx * 1.15
            )
            _paint(img, shadow, (0.55, 0.35, 0.62), alpha=0.5)

    iris = np.full(3, g["iris_shade"])
    for sx in (-1.0, 1.0):
        ex = cx + sx * eye_dx
        white = _soft_ellipse(yy, xx, eye_y, ex, eye_ry, eye_rx)
        _paint(img, white, (0.97, 0.97, 0.97))
        pupil = _soft_ellipse(yy, xx, eye_y, ex, min(eye_ry, eye_rx * 0.55), eye_rx * 0.45)
        _paint(img, pupil, iris)
        brow = (np.abs(yy - (eye_y - 0.065 * S)) < g["brow_th"] * S * 2.0) & (
            np.abs(xx - ex) < eye_rx * 1.25
        )
        _paint(img, brow.astype(np.float64), hair * 0.8 if spec.attribute("Bald") < 0.5 else (0.25, 0.2, 0.15))

    if spec.attribute("Eyeglasses") > 0.5:
        for sx in (-1.0, 1.0):
            ex = cx + sx * eye_dx
            outer = _soft_ellipse(yy, xx, eye_y, ex, eye_rx * 1.5, eye_rx * 1.5)
            inner = _soft_ellipse(yy, xx, eye_y, ex, eye_rx * 1.5 - 1.6, eye_rx * 1.5 - 1.6)
            _paint(img, np.clip(outer - inner, 0.0, 1.0), (0.08, 0.08, 0.10))
        bridge = (np.abs(yy - eye_y) < 0.8) & (np.abs(xx - cx) < eye_dx - eye_rx * 1.2)
        _paint(img, bridge.astype(np.float64), (0.08, 0.08, 0.10))

    nose_len = g["nose_len"] * S * (1.55 if spec.attribute("Big_Nose") > 0.5 else 1.0)
    nose_w = 0.030 * S * (1.55 if spec.attribute("Big_Nose") > 0.5 else 1.0)
    nose = _soft_ellipse(yy, xx, eye_y + 0.115 * S, cx, nose_len * 0.55, nose_w)
    _paint(img, nose, skin * 0.82)

    mouth_y = g["mouth_y"] * S
    mouth_w = g["mouth_w"] * S
    lip_color = (0.80, 0.12, 0.22) if spec.attribute("Wearing_Lipstick") > 0.5 else tuple(
        np.clip(skin * np.array([0.9, 0.55, 0.55]), 0, 1)
    )
    if spec.attribute("Smiling") > 0.5:
        # upward crescent: lower lobe minus a raised copy
        lower = _soft_ellipse(yy, xx, mouth_y - 0.01 * S, cx, 0.045 * S, mouth_w)
        upper = _soft_ellipse(yy, xx, mouth_y - 0.035 * S, cx, 0.042 * S, mouth_w * 0.98)
        _paint(img, np.clip(lower - upper, 0.0, 1.0), lip_color)
    else:
        lips = _soft_ellipse(yy, xx, mouth_y, cx, 0.022 * S, mouth_w)
        _paint(img, lips, lip_color)
    if spec.attribute("Mouth_Open") > 0.5:
        opening = _soft_ellipse(yy, xx, mouth_y + 0.012 * S, cx, 0.014 * S, mouth_w * 0.6)
        _paint(img, opening, (0.12, 0.05, 0.06))

    if spec.attribute("Mustache") > 0.5:
        tash = _soft_ellipse(yy, xx, mouth_y - 0.045 * S, cx, 0.014 * S, mouth_w * 1.1)
        _paint(img, tash, hair * 0.55)
    if spec.attribute("No_Beard") < 0.5:
        chin = _soft_ellipse(yy, xx, mouth_y + 0.085 * S, cx, 0.05 * S, mouth_w * 1.5)
        inner = _soft_ellipse(yy, xx, mouth_y + 0.055 * S, cx, 0.028 * S, mouth_w * 1.0)
        _paint(img, np.clip(chin - inner, 0.0, 1.0) * face, hair * 0.5)

    return np.clip(img, 0.0, 1.0)


def generate_face_set(
    n_faces: int, size: int = 64, seed: int = 0
) -> list[tuple[np.ndarray, np.ndarray, str]]:
    """Generate n_faces aligned faces: (image HxWx3 in [0,1], attrs (20,), identity_id)."""
    out = []
    for i in range(n_faces):
        spec = sample_face_spec(i, seed)
        out.append((render_face(spec, size), spec.attributes.copy(), spec.identity_id))
    return out
