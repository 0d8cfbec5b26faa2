"""Core domain records: class orders, user records, splits, chunks.

Class orders are canonical everywhere a vector index encodes a class:
gender is (female, male), image classes are (female, male, unknown).
"""

from dataclasses import dataclass, field
from enum import Enum


class GenderLabel(str, Enum):
    FEMALE = "female"
    MALE = "male"


class ImageClass(str, Enum):
    FEMALE = "female"
    MALE = "male"
    UNKNOWN = "unknown"


# Canonical index orders; every probability vector follows these.
GENDER_ORDER = (GenderLabel.FEMALE, GenderLabel.MALE)
IMAGE_CLASS_ORDER = (ImageClass.FEMALE, ImageClass.MALE, ImageClass.UNKNOWN)


def gender_from_str(value: str) -> GenderLabel:
    return GenderLabel(value.strip().lower())


@dataclass
class UserRecord:
    """One user: id, optional binary gender label, tweets, image paths."""

    user_id: str
    label: GenderLabel | None
    tweets: list[str]
    images: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.user_id:
            raise ValueError("user_id must be nonempty")


@dataclass
class TweetChunk:
    """A concatenation of `len(member_indices)` tweets from one user.

    `cycled` is set on every chunk of a user whose tweet count fell short
    of chunk_size * n_chunks, so padded users can be surfaced in reports.
    """

    user_id: str
    chunk_index: int
    text: str
    member_indices: list[int]
    cycled: bool = False


@dataclass
class DatasetSplit:
    name: str  # "train" or "test"
    users: list[UserRecord]

    def __post_init__(self):
        if self.name not in ("train", "test"):
            raise ValueError(f"split name must be train or test, got {self.name!r}")
        seen = set()
        for u in self.users:
            if u.user_id in seen:
                raise ValueError(f"duplicate user_id in split {self.name}: {u.user_id}")
            seen.add(u.user_id)

    def user_ids(self) -> set[str]:
        return {u.user_id for u in self.users}


@dataclass
class LabeledImageDataset:
    """Per-class image file lists for the 3-class image fine-tuning task."""

    train: dict[ImageClass, list[str]]
    test: dict[ImageClass, list[str]]

    def counts(self) -> dict[str, dict[str, int]]:
        return {
            "train": {c.value: len(self.train[c]) for c in IMAGE_CLASS_ORDER},
            "test": {c.value: len(self.test[c]) for c in IMAGE_CLASS_ORDER},
        }

    def summary(self) -> str:
        c = self.counts()
        lines = ["labeled image dataset:"]
        for split in ("train", "test"):
            per = ", ".join(f"{k}={v}" for k, v in c[split].items())
            lines.append(f"  {split}: {per}")
        return "\n".join(lines)
