"""The mixed random tree corpus used by the acceptance criteria."""

import random

from sigdim.tree import gen_caterpillar, gen_h_graph, gen_path, gen_random_tree, gen_star

CORPUS_SEED = 1234
CORPUS_SIZE = 1000


def build_corpus(seed=CORPUS_SEED):
    """1000 trees on 3..500 vertices: Prüfer-uniform, paths, stars, caterpillars, H-graphs."""
    rng = random.Random(seed)
    items = []
    for i in range(600):
        n = rng.randint(3, 500)
        items.append((f"random-{n}-{i}", gen_random_tree(n, rng.getrandbits(64))))
    for i in range(100):
        n = rng.randint(3, 500)
        items.append((f"path-{n}", gen_path(n)))
    for i in range(100):
        m = rng.randint(2, 64)
        items.append((f"star-{m}", gen_star(m)))
    while len(items) < 950:
        spine = rng.randint(2, 120)
        legs = rng.randint(0, 6)
        t = gen_caterpillar(spine, legs, rng.getrandbits(64))
        if 3 <= t.n <= 500:
            items.append((f"caterpillar-{spine}-{legs}-{len(items)}", t))
    while len(items) < CORPUS_SIZE:
        beta = rng.randint(1, 100)
        items.append((f"h-{beta}", gen_h_graph(beta)))
    return items
