#!/usr/bin/env python3
"""Regenerates the synthetic corpora in this directory. The prose files
(prose_*.txt) are hand-written and not touched by this script."""

import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

VOCAB = (
    "the of and to in a is that it was for on are as with his they at be this "
    "from have or by one had not but what all were when we there can an your "
    "which their said if do will each about how up out them then she many some "
    "so these would other into has more her two like him see time could no make "
    "than first been its who now people my made over did down only way find use "
    "may water long little very after words called just where most know get "
    "through back much before go good new write our used me man too any day same "
    "right look think also around another came come work three word must because "
    "does part even place well such here take why things help put years different "
    "away again off went old number great tell men say small every found still "
    "between name should home big give air line set own under read last never us "
    "left end along while might next sound below saw something thought both few "
    "those always looked show large often together asked house world going want "
    "school important until form food keep children feet land side without boy "
    "once animals life enough took sometimes four head above kind began almost "
    "live page got earth need far hand high year mother light parts country father"
).split()


def zipf_text(rng, n_tokens, alpha, vocab):
    weights = [1.0 / (k + 1) ** alpha for k in range(len(vocab))]
    words = rng.choices(vocab, weights=weights, k=n_tokens)
    return wrap(words, rng)


def monkey_text(rng, n_words, letters, p_s):
    words = []
    for _ in range(n_words):
        w = rng.choice(letters)
        while rng.random() >= p_s:
            w += rng.choice(letters)
        words.append(w)
    return wrap(words, rng)


def wrap(words, rng):
    lines, line = [], []
    for w in words:
        line.append(w)
        if len(line) >= rng.randint(8, 14):
            lines.append(" ".join(line))
            line = []
    if line:
        lines.append(" ".join(line))
    return "\n".join(lines) + "\n"


def main():
    rng = random.Random(20191)
    specs = [
        ("zipf_a100.txt", lambda: zipf_text(rng, 3000, 1.0, VOCAB)),
        ("zipf_a080.txt", lambda: zipf_text(rng, 2500, 0.8, VOCAB)),
        ("zipf_a120.txt", lambda: zipf_text(rng, 4000, 1.2, VOCAB)),
        ("zipf_a150.txt", lambda: zipf_text(rng, 2000, 1.5, VOCAB)),
        ("zipf_shuffled.txt", lambda: zipf_text(rng, 3000, 1.0, rng.sample(VOCAB, len(VOCAB)))),
        ("monkey_n2.txt", lambda: monkey_text(rng, 2000, "ab", 0.3)),
        ("monkey_n3.txt", lambda: monkey_text(rng, 2500, "abc", 0.25)),
        ("monkey_n5.txt", lambda: monkey_text(rng, 3000, "abcde", 0.2)),
        ("monkey_n26.txt", lambda: monkey_text(rng, 3000, "abcdefghijklmnopqrstuvwxyz", 0.18)),
        ("monkey_vowels.txt", lambda: monkey_text(rng, 1500, "aeiou", 0.4)),
    ]
    for name, make in specs:
        (HERE / name).write_text(make(), encoding="utf-8")


if __name__ == "__main__":
    main()
