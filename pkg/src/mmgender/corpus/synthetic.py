"""Synthetic corpus generator for desk-scale end-to-end runs.

Emits a PAN-style tweet/photo corpus plus a labeled image dataset in the
same layouts the real loaders consume, so every downstream stage is
format-agnostic. Users get 100 synthetic tweets (class-indicative marker
tokens injected with probability text_signal) and 10 synthetic 64x64
images (class hue + glyph rendered with probability image_signal,
otherwise the neutral "unknown" pattern). Everything is deterministic
under the seed.
"""

from __future__ import annotations

import random
from pathlib import Path
from xml.sax.saxutils import escape

from PIL import Image, ImageDraw

from ..errors import InvalidSignal
from ..records import (
    IMAGE_CLASS_ORDER,
    DatasetSplit,
    GenderLabel,
    ImageClass,
    LabeledImageDataset,
    UserRecord,
)

FEMALE_MARKERS = ("velari", "miraselle", "ondrea")
MALE_MARKERS = ("tharok", "brundar", "kovetz")

NEUTRAL_WORDS = (
    "today morning evening coffee lunch train park city river light sound "
    "music movie book game photo friends work idea time people place thing "
    "world day week walking sitting waiting reading quick slow small big new "
    "old good fine maybe again still almost really"
).split()

IMAGE_SIZE = 64
_BASE_COLORS = {
    ImageClass.FEMALE: (205, 64, 150),
    ImageClass.MALE: (64, 120, 205),
    ImageClass.UNKNOWN: (128, 128, 128),
}


def render_pattern_image(cls: ImageClass, rng: random.Random, size: int = IMAGE_SIZE) -> Image.Image:
    """Class-specific hue plus glyph (circle/square/cross) with seeded jitter."""
    base = _BASE_COLORS[cls]
    bg = tuple(min(255, max(0, c + rng.randint(-18, 18))) for c in base)
    img = Image.new("RGB", (size, size), bg)
    draw = ImageDraw.Draw(img)
    dark = tuple(max(0, c - 70) for c in bg)
    cx = size // 2 + rng.randint(-6, 6)
    cy = size // 2 + rng.randint(-6, 6)
    r = size // 4 + rng.randint(-3, 3)
    if cls is ImageClass.FEMALE:
        draw.ellipse([cx - r, cy - r, cx + r, cy + r], fill=dark)
    elif cls is ImageClass.MALE:
        draw.rectangle([cx - r, cy - r, cx + r, cy + r], fill=dark)
    else:
        draw.line([cx - r, cy - r, cx + r, cy + r], fill=dark, width=4)
        draw.line([cx - r, cy + r, cx + r, cy - r], fill=dark, width=4)
    for _ in range(60):
        x, y = rng.randrange(size), rng.randrange(size)
        img.putpixel((x, y), tuple(rng.randint(0, 255) for _ in range(3)))
    return img


def classify_pattern(image_path) -> ImageClass:
    """Rule-based readback of the rendered pattern from mean hue.

    This is the generator's own inverse; the simulated-features stage uses
    it as an oracle base model that never touches a transformer runtime.
    """
    with Image.open(image_path) as img:
        rgb = img.convert("RGB").resize((8, 8))
        pixels = list(rgb.getdata())
    n = len(pixels)
    r = sum(p[0] for p in pixels) / n
    b = sum(p[2] for p in pixels) / n
    if r - b > 25:
        return ImageClass.FEMALE
    if b - r > 25:
        return ImageClass.MALE
    return ImageClass.UNKNOWN


def marker_gender(text: str) -> GenderLabel | None:
    """Which class's marker tokens a tweet/chunk carries, if any."""
    words = set(text.lower().split())
    has_f = any(m in words for m in FEMALE_MARKERS)
    has_m = any(m in words for m in MALE_MARKERS)
    if has_f and not has_m:
        return GenderLabel.FEMALE
    if has_m and not has_f:
        return GenderLabel.MALE
    return None


def _make_tweet(rng: random.Random, label: GenderLabel, signal_rate: float) -> str:
    words = [rng.choice(NEUTRAL_WORDS) for _ in range(rng.randint(6, 12))]
    if rng.random() < signal_rate:
        markers = FEMALE_MARKERS if label is GenderLabel.FEMALE else MALE_MARKERS
        for _ in range(rng.randint(1, 2)):
            words.insert(rng.randint(0, len(words)), rng.choice(markers))
    return " ".join(words)


def _write_user_xml(path: Path, tweets: list[str]) -> None:
    lines = ["<documents>"]
    lines += [f"  <document>{escape(t)}</document>" for t in tweets]
    lines.append("</documents>")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def generate_synthetic_corpus(
    out_dir,
    n_users: int,
    image_signal: float,
    text_signal: float,
    seed: int,
    complementary: bool = False,
    language: str = "en",
    tweets_per_user: int = 100,
    images_per_user: int = 10,
    labeled_train_per_class: int | None = None,
    labeled_test_per_class: int | None = None,
) -> tuple[DatasetSplit, DatasetSplit, LabeledImageDataset]:
    """Generate and write a full synthetic corpus; return it in memory.

    Labels are exactly balanced; the train/test split is 80/20 by user.
    With complementary=True each user is informative in exactly one
    modality (alternating within each class): the stated signal rate
    applies to that modality's items and the other modality stays neutral.
    This makes the two modalities carry complementary information.
    """
    for name, value in (("image_signal", image_signal), ("text_signal", text_signal)):
        if not 0.0 <= value <= 1.0:
            raise InvalidSignal(f"{name} must be within [0, 1], got {value}")
    if n_users < 4 or n_users % 2 != 0:
        raise ValueError(f"n_users must be even and >= 4, got {n_users}")

    out = Path(out_dir)
    n_train = (int(n_users * 0.8) // 2) * 2
    users: dict[str, list[UserRecord]] = {"train": [], "test": []}

    for i in range(n_users):
        uid = f"user{i:04d}"
        label = GenderLabel.FEMALE if i % 2 == 0 else GenderLabel.MALE
        if complementary:
            image_leaning = (i // 2) % 2 == 0
            img_rate = image_signal if image_leaning else 0.0
            txt_rate = 0.0 if image_leaning else text_signal
        else:
            img_rate, txt_rate = image_signal, text_signal
        split = "train" if i < n_train else "test"
        rng = random.Random(f"{seed}:user:{uid}")

        tweets = [_make_tweet(rng, label, txt_rate) for _ in range(tweets_per_user)]
        base = out / "pan" / split / language
        (base / "text").mkdir(parents=True, exist_ok=True)
        _write_user_xml(base / "text" / f"{uid}.xml", tweets)

        photo_dir = base / "photo" / uid
        photo_dir.mkdir(parents=True, exist_ok=True)
        image_refs = []
        for k in range(images_per_user):
            cls = ImageClass(label.value) if rng.random() < img_rate else ImageClass.UNKNOWN
            img = render_pattern_image(cls, rng)
            ref = photo_dir / f"{k}.png"
            img.save(ref, format="PNG")
            image_refs.append(str(ref))
        users[split].append(
            UserRecord(user_id=uid, label=label, tweets=tweets, images=sorted(image_refs))
        )

    for split in ("train", "test"):
        truth = out / "pan" / split / language / "truth.txt"
        truth.write_text(
            "".join(f"{u.user_id}:::{u.label.value}\n" for u in users[split]),
            encoding="utf-8",
        )

    labeled_counts = {
        "train": labeled_train_per_class or max(24, n_users),
        "test": labeled_test_per_class or max(8, n_users // 4),
    }
    labeled: dict[str, dict[ImageClass, list[str]]] = {}
    for split, per_class in labeled_counts.items():
        labeled[split] = {}
        for cls in IMAGE_CLASS_ORDER:
            class_dir = out / "labeled" / split / cls.value
            class_dir.mkdir(parents=True, exist_ok=True)
            refs = []
            for j in range(per_class):
                rng = random.Random(f"{seed}:labeled:{split}:{cls.value}:{j}")
                path = class_dir / f"img{j:04d}.png"
                render_pattern_image(cls, rng).save(path, format="PNG")
                refs.append(str(path))
            labeled[split][cls] = refs

    return (
        DatasetSplit(name="train", users=users["train"]),
        DatasetSplit(name="test", users=users["test"]),
        LabeledImageDataset(train=labeled["train"], test=labeled["test"]),
    )
