"""Synthetic corpus where chosen token pairs always share a window."""
import itertools

import numpy as np

from apiexpand.embedding import train_skipgram


def planted_corpus(seed: int, pairs: int = 8, sentences: int = 400):
    """Sentences built from planted pairs (p_i, q_i) drawn from two disjoint topic pools.

    Pairs from pool A never share a sentence with pairs from pool B, so any
    ``p`` from A never co-occurs with an ``r`` from B.
    """
    rng = np.random.default_rng(seed)
    half = pairs // 2
    pools = [list(range(half)), list(range(half, pairs))]
    corpus = []
    for i in range(sentences):
        pool = pools[i % 2]
        sent = []
        for j in rng.choice(pool, size=4):
            sent += [f"p{j}", f"q{j}"] if rng.random() < 0.5 else [f"q{j}", f"p{j}"]
        corpus.append(sent)
    planted = [(f"p{j}", f"q{j}") for j in range(pairs)]
    unrelated = [(f"p{a}", f"q{b}") for a, b in itertools.product(pools[0], pools[1])]
    unrelated += [(f"p{b}", f"q{a}") for a, b in itertools.product(pools[0], pools[1])]
    return corpus, planted, unrelated


def planted_margin(seed: int, **train) -> float:
    corpus, planted, unrelated = planted_corpus(seed)
    params = dict(dim=32, window=2, min_count=1, epochs=5, seed=seed)
    params.update(train)
    model = train_skipgram(corpus, **params)
    pos = np.mean([model.cosine(a, b) for a, b in planted])
    neg = np.mean([model.cosine(a, b) for a, b in unrelated])
    return float(pos - neg)
