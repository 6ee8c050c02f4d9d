"""Engine configuration: an INI document with ``[paths]``, ``[params]`` and
``[embedding]`` sections. Relative paths resolve against the file's directory.

Example::

    [paths]
    corpus = corpus.jsonl
    qa_index = qa_index.json
    df_table = df.json
    vectors = vectors.txt
    code_index = code_index.json

    [params]
    m = 35
    n = 16
    k = 10
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Iterable, Optional

from .corpus import Vocabulary, load_corpus
from .embedding import SkipGramConfig, load_vectors
from .exceptions import ConfigError, MissingArtifactError
from .index import load_index
from .validation import check_int, check_positive, check_unit_interval

PATH_KEYS = (
    "corpus", "qa_index", "code_index", "vectors", "df_table",
    "stopwords", "keywords", "caps_whitelist",
)


@dataclass(frozen=True)
class EngineConfig:
    paths: dict = field(default_factory=dict)
    m: int = 35
    n: int = 16
    k: int = 10
    phi: float = 0.85
    init: float = 0.25
    epsilon: float = 1e-4
    max_iter: int = 100
    k1: float = 1.2
    b: float = 0.75
    scoring: str = "both"
    seed: int = 1
    embedding: SkipGramConfig = field(default_factory=SkipGramConfig)

    def __post_init__(self):
        check_int(self.m, "m")
        check_int(self.n, "n")
        check_int(self.k, "k", minimum=0)
        check_unit_interval(self.phi, "phi")
        check_positive(self.epsilon, "epsilon")
        check_int(self.max_iter, "max_iter")
        check_positive(self.k1, "k1")
        check_unit_interval(self.b, "b")
        unknown = set(self.paths) - set(PATH_KEYS)
        if unknown:
            raise ConfigError(f"unknown path keys: {sorted(unknown)}")

    def path(self, key: str, required: bool = True) -> Optional[Path]:
        p = self.paths.get(key)
        if p is None:
            if required:
                raise MissingArtifactError(f"missing artifact: no '{key}' path configured")
            return None
        p = Path(p)
        if not p.exists():
            if required:
                raise MissingArtifactError(f"missing artifact: {key} file {p} does not exist")
            return None
        return p

    def vocabulary(self) -> Optional[Vocabulary]:
        sw, kw = self.path("stopwords", False), self.path("keywords", False)
        if sw is None and kw is None:
            return None
        return Vocabulary.from_files(sw, kw)

    def caps_whitelist(self) -> Optional[frozenset]:
        p = self.path("caps_whitelist", False)
        if p is None:
            return None
        return frozenset(w.strip() for w in p.read_text(encoding="utf-8").splitlines() if w.strip())

    def estimator_params(self) -> dict:
        e = self.embedding
        return dict(
            m=self.m, n=self.n, k=self.k, phi=self.phi, init=self.init,
            epsilon=self.epsilon, max_iter=self.max_iter, k1=self.k1, b=self.b,
            scoring=self.scoring, seed=self.seed, embedding_dim=e.dim, window=e.window,
            min_count=e.min_count, epochs=e.epochs, negatives=e.negatives,
            learning_rate=e.learning_rate,
        )


_PARAM_TYPES = {f.name: f.type for f in fields(EngineConfig) if f.name not in ("paths", "embedding")}
_EMBED_TYPES = {f.name: f.type for f in fields(SkipGramConfig)}
_CASTS = {"int": int, "float": float, "str": str}


def _cast(section: str, key: str, value: str):
    types = _PARAM_TYPES if section == "params" else _EMBED_TYPES
    if key not in types:
        raise ConfigError(f"unknown {section} key {key!r}")
    try:
        return _CASTS[types[key]](value)
    except ValueError:
        raise ConfigError(f"{section}.{key}: cannot parse {value!r}") from None


def load_config(path=None, overrides: Iterable[str] = ()) -> EngineConfig:
    """Read a config file (optional) and apply ``section.key=value`` overrides.

    A bare ``key=value`` override targets ``[params]``.
    """
    parser = configparser.ConfigParser()
    base = Path.cwd()
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file {path} does not exist")
        try:
            parser.read(path, encoding="utf-8")
        except configparser.Error as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        base = path.parent
    for sec in parser.sections():
        if sec not in ("paths", "params", "embedding"):
            raise ConfigError(f"unknown config section [{sec}]")

    paths = {}
    if parser.has_section("paths"):
        for key, value in parser.items("paths"):
            paths[key] = str((base / value).resolve()) if value else None
    params = {}
    if parser.has_section("params"):
        params = {k: _cast("params", k, v) for k, v in parser.items("params")}
    embed = {}
    if parser.has_section("embedding"):
        embed = {k: _cast("embedding", k, v) for k, v in parser.items("embedding")}

    for item in overrides:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"bad override {item!r}: expected key=value")
        section, dot, key = key.strip().rpartition(".")
        section = section or "params"
        if section == "paths":
            paths[key] = str(Path(value).resolve())
        elif section == "params":
            params[key] = _cast("params", key, value)
        elif section == "embedding":
            embed[key] = _cast("embedding", key, value)
        else:
            raise ConfigError(f"unknown config section {section!r} in override {item!r}")

    try:
        embedding = SkipGramConfig(**{"seed": params.get("seed", 1), **embed})
    except ValueError as exc:
        raise ConfigError(f"embedding: {exc}") from exc
    return EngineConfig(paths=paths, embedding=embedding, **params)


def with_params(config: EngineConfig, **params) -> EngineConfig:
    return replace(config, **{k: v for k, v in params.items() if v is not None})


def load_engine(config: EngineConfig):
    """Assemble a fitted :class:`ApiQueryReformulator` from the configured artifacts."""
    from .reformulate import ApiQueryReformulator
    from .weights import DocumentFrequencies

    threads = load_corpus(config.path("corpus"))
    index = load_index(config.path("qa_index"), k1=config.k1, b=config.b)
    df = DocumentFrequencies.load(config.path("df_table"))
    vectors = load_vectors(config.path("vectors"))
    return ApiQueryReformulator.from_artifacts(
        threads, index, df, vectors,
        caps_whitelist=config.caps_whitelist(),
        vocabulary=config.vocabulary(),
        **config.estimator_params(),
    )
