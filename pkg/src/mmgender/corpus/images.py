"""Labeled image dataset ingestion for the 3-class fine-tuning task.

Expected layout: <root>/{train,test}/{female,male,unknown}/*.{jpg,jpeg,png}
"""

from __future__ import annotations

from pathlib import Path

from PIL import Image, UnidentifiedImageError

from ..errors import EmptyClass, IntegrityError, MissingClassFolder
from ..records import IMAGE_CLASS_ORDER, ImageClass, LabeledImageDataset

IMAGE_EXTENSIONS = (".jpg", ".jpeg", ".png")


def _verify_decodes(path: Path) -> None:
    try:
        with Image.open(path) as img:
            img.verify()
            if 0 in img.size:
                raise IntegrityError(f"zero-dimension image {path}")
    except (UnidentifiedImageError, OSError, SyntaxError) as e:
        raise IntegrityError(f"image {path} does not decode: {e}") from e


def _class_files(split_dir: Path, cls: ImageClass, verify: bool) -> list[str]:
    class_dir = split_dir / cls.value
    if not class_dir.is_dir():
        raise MissingClassFolder(f"missing class folder {class_dir}")
    files = sorted(
        p for p in class_dir.iterdir()
        if p.is_file() and p.suffix.lower() in IMAGE_EXTENSIONS
    )
    if not files:
        raise EmptyClass(f"class folder {class_dir} has no image files")
    if verify:
        for p in files:
            _verify_decodes(p)
    return [str(p) for p in files]


def load_labeled_image_dataset(root_path, verify: bool = True) -> LabeledImageDataset:
    """Collect per-class file lists for both splits.

    With verify=True (default) every file is checked to decode; the counts
    are available via the returned dataset's counts()/summary().
    """
    root = Path(root_path)
    split_maps = {}
    for split in ("train", "test"):
        split_dir = root / split
        if not split_dir.is_dir():
            raise MissingClassFolder(f"missing split folder {split_dir}")
        split_maps[split] = {
            cls: _class_files(split_dir, cls, verify) for cls in IMAGE_CLASS_ORDER
        }
    dataset = LabeledImageDataset(train=split_maps["train"], test=split_maps["test"])
    for cls in IMAGE_CLASS_ORDER:
        shared = set(dataset.train[cls]) & set(dataset.test[cls])
        if shared:
            raise IntegrityError(f"{len(shared)} {cls.value} files appear in both splits")
    return dataset
