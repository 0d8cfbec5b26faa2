"""PAN-style corpus ingestion.

Expected layout, per split:

    <root>/<split>/<language>/truth.txt                lines "user_id:::label[:::...]"
    <root>/<split>/<language>/text/<user_id>.xml       <documents><document>...</document></documents>
    <root>/<split>/<language>/photo/<user_id>/<n>.jpeg (optional)
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path

from ..errors import IntegrityError, MissingTruthFile, UnknownLabel
from ..records import DatasetSplit, GenderLabel, UserRecord

IMAGE_EXTENSIONS = (".jpg", ".jpeg", ".png")


def _parse_truth(path: Path) -> list[tuple[str, GenderLabel]]:
    entries = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(":::")
        if len(parts) < 2 or not parts[0]:
            raise IntegrityError(f"{path}:{lineno}: malformed truth line {raw!r}")
        user_id, label = parts[0], parts[1].strip().lower()
        try:
            entries.append((user_id, GenderLabel(label)))
        except ValueError:
            raise UnknownLabel(
                f"{path}:{lineno}: label {parts[1]!r} is not female/male"
            ) from None
    return entries


def _parse_tweets(xml_path: Path) -> list[str]:
    try:
        tree = ET.parse(xml_path)
    except ET.ParseError as e:
        raise IntegrityError(f"unparseable tweet document {xml_path}: {e}") from e
    documents = tree.getroot().iter("document")
    tweets = [(doc.text or "") for doc in documents]
    if not tweets:
        raise IntegrityError(f"tweet document {xml_path} contains no <document> entries")
    return tweets


def _image_refs(photo_dir: Path) -> list[str]:
    if not photo_dir.is_dir():
        return []
    names = sorted(
        p.name for p in photo_dir.iterdir()
        if p.is_file() and p.suffix.lower() in IMAGE_EXTENSIONS
    )
    return [str(photo_dir / n) for n in names]


def load_pan_dataset(root_path, language: str, split: str) -> DatasetSplit:
    """Load one split of a PAN-style corpus into UserRecords.

    Tweets keep document order; image refs are sorted lexicographically.
    A truth entry without a readable tweet document is an IntegrityError.
    """
    base = Path(root_path) / split / language
    truth_path = base / "truth.txt"
    if not truth_path.is_file():
        raise MissingTruthFile(f"no truth file at {truth_path}")

    users = []
    for user_id, label in _parse_truth(truth_path):
        xml_path = base / "text" / f"{user_id}.xml"
        if not xml_path.is_file():
            raise IntegrityError(f"truth names {user_id} but {xml_path} is missing")
        tweets = _parse_tweets(xml_path)
        images = _image_refs(base / "photo" / user_id)
        users.append(UserRecord(user_id=user_id, label=label, tweets=tweets, images=images))
    return DatasetSplit(name=split, users=users)


def load_pan_corpus(root_path, language: str) -> tuple[DatasetSplit, DatasetSplit]:
    """Load train and test splits and enforce disjoint user ids."""
    train = load_pan_dataset(root_path, language, "train")
    test = load_pan_dataset(root_path, language, "test")
    overlap = train.user_ids() & test.user_ids()
    if overlap:
        raise IntegrityError(
            f"{len(overlap)} user ids appear in both splits, e.g. {sorted(overlap)[:3]}"
        )
    return train, test
