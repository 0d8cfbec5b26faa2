from .chunks import chunk_tweets
from .images import load_labeled_image_dataset
from .pan import load_pan_dataset, load_pan_corpus
from .synthetic import generate_synthetic_corpus

__all__ = [
    "chunk_tweets",
    "load_labeled_image_dataset",
    "load_pan_dataset",
    "load_pan_corpus",
    "generate_synthetic_corpus",
]
