"""Command-line interface.

Exit codes: 0 success, 1 runtime error, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import json
import logging
import shutil
import sys
from pathlib import Path

from . import __version__
from .config import load_config, load_engine, with_params
from .corpus import IngestionPolicy, Vocabulary, ingest_file, load_corpus, preprocess, save_corpus
from .embedding import SkipGramConfig, save_vectors, train_skipgram
from .evaluation import code_tokens, load_code_corpus, load_eval_set, parse_sweep, run_experiment, Setting
from .exceptions import ApiExpandError, ConfigError
from .index import build_index, load_index, save_index, search
from .weights import document_frequencies

logger = logging.getLogger("apiexpand")


def _vocab(args) -> Vocabulary | None:
    if args.stopwords is None and args.keywords is None:
        return None
    return Vocabulary.from_files(args.stopwords, args.keywords)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_build_corpus(args) -> int:
    policy = IngestionPolicy(
        tag=args.tag or None,
        require_accepted=not args.allow_unaccepted,
        code=args.code_policy,
    )
    report = ingest_file(args.input, policy, _vocab(args))
    save_corpus(report.threads, args.output)
    print(report.summary())
    if report.malformed:
        print(f"{report.malformed} malformed records skipped", file=sys.stderr)
    return 0


def cmd_index(args) -> int:
    threads = load_corpus(args.corpus)
    index = build_index(((t.id, t.preprocessed_text) for t in threads), k1=args.k1, b=args.b)
    save_index(index, args.output)
    df_path = args.df or str(Path(args.output).with_suffix("")) + ".df.json"
    document_frequencies(threads).save(df_path)
    print(f"indexed {index.doc_count} threads -> {args.output}; DF table -> {df_path}")
    return 0


def cmd_index_code(args) -> int:
    docs = load_code_corpus(args.code)
    vocab = _vocab(args)
    index = build_index(((d, preprocess(code, vocab)) for d, code in docs), k1=args.k1, b=args.b)
    save_index(index, args.output)
    print(f"doc_count {index.doc_count}")
    return 0


def cmd_train_embeddings(args) -> int:
    threads = load_corpus(args.corpus)
    config = SkipGramConfig(
        dim=args.dim, window=args.window, min_count=args.min_count, epochs=args.epochs,
        negatives=args.negatives, learning_rate=args.lr, seed=args.seed,
    )
    model = train_skipgram((t.preprocessed_text for t in threads), config)
    save_vectors(model, args.output)
    print(f"{len(model)} vectors of dim {model.dim} -> {args.output}")
    return 0


def _config(args):
    config = load_config(args.config, args.set or ())
    return with_params(
        config,
        m=getattr(args, "m", None), n=getattr(args, "n", None), k=getattr(args, "k", None),
    )


def cmd_reformulate(args) -> int:
    engine = load_engine(_config(args))
    _emit(engine.reformulate(args.query).to_dict())
    return 0


def cmd_search(args) -> int:
    config = _config(args)
    code_index = load_index(config.path("code_index"))
    vocab = config.vocabulary()
    from .validation import check_query

    query = check_query(args.query, vocab)
    top = args.top

    def ranked(tokens):
        return [{"id": h.doc_id, "score": round(h.score, 6)} for h in search(code_index, tokens, top)]

    out = {"query": args.query, "baseline": {"tokens": list(query.keywords), "results": ranked(code_tokens(query.keywords, vocab))}}
    if args.reformulate:
        ref = load_engine(config).reformulate(query)
        tokens = code_tokens(ref.full_tokens, vocab)
        out["reformulated"] = {"query": ref.text, "suggested": list(ref.suggested), "results": ranked(tokens)}
    _emit(out)
    return 0


def cmd_evaluate(args) -> int:
    config = _config(args)
    records = load_eval_set(args.eval)
    engine = load_engine(config)
    code_index = None
    if config.path("code_index", required=False) is not None:
        code_index = load_index(config.path("code_index"))
    settings = parse_sweep(args.sweep or (), Setting(config.m, config.n, max(config.k, 1)))
    ks = _parse_ks(args.ks)
    report = run_experiment(engine, records, code_index, settings, ks=ks, jobs=args.jobs)
    paths = report.write(args.out)
    for p in paths:
        print(p)
    return 0


def _parse_ks(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ConfigError(f"bad --ks value {text!r}") from None


def cmd_init_fixture(args) -> int:
    """Copy the bundled desk-scale fixture and build every artifact for it."""
    from .fixtures import fixture_path

    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for name in ("qa_threads.jsonl", "code_corpus.jsonl", "eval_queries.jsonl"):
        shutil.copyfile(fixture_path(name), out / name)
    report = ingest_file(out / "qa_threads.jsonl")
    save_corpus(report.threads, out / "corpus.jsonl")
    print(f"corpus: {report.summary()}")
    threads = report.threads
    save_index(build_index((t.id, t.preprocessed_text) for t in threads), out / "qa_index.json")
    document_frequencies(threads).save(out / "df.json")
    docs = load_code_corpus(out / "code_corpus.jsonl")
    code_index = build_index((d, preprocess(c)) for d, c in docs)
    save_index(code_index, out / "code_index.json")
    print(f"code index: doc_count {code_index.doc_count}")
    model = train_skipgram((t.preprocessed_text for t in threads), SkipGramConfig(seed=args.seed))
    save_vectors(model, out / "vectors.txt")
    print(f"vectors: {len(model)} x {model.dim}")
    (out / "engine.ini").write_text(
        "[paths]\n"
        "corpus = corpus.jsonl\n"
        "qa_index = qa_index.json\n"
        "df_table = df.json\n"
        "vectors = vectors.txt\n"
        "code_index = code_index.json\n\n"
        "[params]\n"
        "m = 35\nn = 16\nk = 10\n"
        f"seed = {args.seed}\n",
        encoding="utf-8",
    )
    print(out / "engine.ini")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apiexpand",
        description="Reformulate natural-language code search queries with relevant API classes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def vocab_opts(p):
        p.add_argument("--stopwords", help="stopword list file (one token per line)")
        p.add_argument("--keywords", help="programming keyword list file")

    def bm25_opts(p):
        p.add_argument("--k1", type=float, default=1.2)
        p.add_argument("--b", type=float, default=0.75)

    def engine_opts(p, with_mnk=True):
        p.add_argument("-c", "--config", help="engine configuration file")
        p.add_argument("--set", action="append", metavar="SECTION.KEY=VALUE",
                       help="override a configuration value")
        if with_mnk:
            p.add_argument("-m", type=int, help="feedback threads (M)")
            p.add_argument("-n", type=int, help="candidate list size (N)")
            p.add_argument("-k", type=int, help="suggested classes (K)")

    p = sub.add_parser("build-corpus", help="filter Q&A JSON lines into a corpus")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--tag", default="java", help="required tag; empty string disables")
    p.add_argument("--code-policy", choices=("either", "both"), default="either")
    p.add_argument("--allow-unaccepted", action="store_true")
    vocab_opts(p)
    p.set_defaults(func=cmd_build_corpus)

    p = sub.add_parser("index", help="index a corpus for feedback retrieval")
    p.add_argument("corpus")
    p.add_argument("output")
    p.add_argument("--df", help="DF table output (default: <output>.df.json)")
    bm25_opts(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("index-code", help="index a code corpus ({id, code} JSON lines)")
    p.add_argument("code")
    p.add_argument("output")
    bm25_opts(p)
    vocab_opts(p)
    p.set_defaults(func=cmd_index_code)

    p = sub.add_parser("train-embeddings", help="train skip-gram vectors on a corpus")
    p.add_argument("corpus")
    p.add_argument("output")
    p.add_argument("--dim", type=int, default=100)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--min-count", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--lr", type=float, default=0.025)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_train_embeddings)

    p = sub.add_parser("reformulate", help="suggest API classes for a query (JSON)")
    engine_opts(p)
    p.add_argument("query")
    p.set_defaults(func=cmd_reformulate)

    p = sub.add_parser("search", help="search the code index (JSON)")
    engine_opts(p)
    p.add_argument("query")
    p.add_argument("--reformulate", action="store_true", help="also run the reformulated query")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("evaluate", help="run the evaluation protocol and write reports")
    engine_opts(p, with_mnk=True)
    p.add_argument("eval", help="evaluation set ({id, query, gt_api[], gt_code_ids[]} JSON lines)")
    p.add_argument("--sweep", action="append", metavar="PARAM=VALUES",
                   help="e.g. m=10..45:5, n=5,16,30, k=5,10")
    p.add_argument("--ks", default="1,3,5,10", help="cut-offs for the metric tables")
    p.add_argument("--out", default="report", help="output directory")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("init-fixture", help="build all artifacts for the bundled fixture")
    p.add_argument("output")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_init_fixture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"apiexpand: error: {exc}", file=sys.stderr)
        return 2
    except (ApiExpandError, OSError, ValueError) as exc:
        print(f"apiexpand: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
