"""Deterministic tweet chunking: n_chunks concatenations of chunk_size tweets."""

from __future__ import annotations

import random

from ..errors import EmptyTweetList
from ..records import TweetChunk, UserRecord


def _rng_for(seed: int, user_id: str, tag: str = "chunks") -> random.Random:
    # String seeding is stable across processes and platforms.
    return random.Random(f"{seed}:{tag}:{user_id}")


def chunk_tweets(
    record: UserRecord,
    chunk_size: int = 10,
    n_chunks: int = 10,
    seed: int = 0,
    independent_sampling: bool = False,
) -> list[TweetChunk]:
    """Build n_chunks TweetChunks of chunk_size tweets each.

    Default policy: one seeded shuffle of all tweet indices, partitioned
    into consecutive chunks, so each tweet is used at most once while the
    supply lasts. When the user has fewer than chunk_size * n_chunks
    tweets, the shuffled list is cycled to fill the remaining slots and
    every produced chunk carries cycled=True.

    With independent_sampling=True each chunk instead draws chunk_size
    tweets without replacement, independently of the other chunks (chunks
    may then share tweets).

    Pure in (record, chunk_size, n_chunks, seed): repeated calls are
    identical.
    """
    if not record.tweets:
        raise EmptyTweetList(f"user {record.user_id} has no tweets")
    if chunk_size < 1 or n_chunks < 1:
        raise ValueError("chunk_size and n_chunks must be >= 1")

    n = len(record.tweets)
    rng = _rng_for(seed, record.user_id)
    cycled = n < chunk_size * n_chunks and not independent_sampling

    if independent_sampling:
        slots: list[int] = []
        for _ in range(n_chunks):
            pool = list(range(n))
            rng.shuffle(pool)
            if n < chunk_size:
                cycled = True
                while len(pool) < chunk_size:
                    pool.append(pool[len(pool) % n])
            slots.extend(pool[:chunk_size])
    else:
        order = list(range(n))
        rng.shuffle(order)
        slots = [order[i % n] for i in range(chunk_size * n_chunks)]

    chunks = []
    for k in range(n_chunks):
        members = slots[k * chunk_size:(k + 1) * chunk_size]
        text = " ".join(record.tweets[i].strip() for i in members)
        chunks.append(
            TweetChunk(
                user_id=record.user_id,
                chunk_index=k,
                text=text,
                member_indices=members,
                cycled=cycled,
            )
        )
    return chunks
