import pytest

from apiexpand import ApiQueryReformulator, build_index, preprocess
from apiexpand.corpus import ingest_file
from apiexpand.evaluation import load_code_corpus, load_eval_set
from apiexpand.fixtures import fixture_path

GRAYSCALE_SNIPPET = """BufferedImage master = ImageIO.read(new URL(
    "http://www.java2s.com/style/download.png"));
BufferedImage gray = new BufferedImage(master.getWidth(),
    master.getHeight(), BufferedImage.TYPE_INT_ARGB);

ColorConvertOp op = new ColorConvertOp(
    ColorSpace.getInstance(ColorSpace.CS_GRAY), null);
op.filter(master, gray);

ImageIO.write(master,"png",new File("path/to/master"));
ImageIO.write(gray,"png", new File("path/to/gray/image"));"""

GRAYSCALE_QUERY = "Convert image to grayscale without losing transparency"


@pytest.fixture(scope="session")
def fixture_threads():
    return ingest_file(fixture_path("qa_threads.jsonl")).threads


@pytest.fixture(scope="session")
def fixture_engine(fixture_threads):
    return ApiQueryReformulator(seed=1).fit(fixture_threads)


@pytest.fixture(scope="session")
def code_docs():
    return load_code_corpus(fixture_path("code_corpus.jsonl"))


@pytest.fixture(scope="session")
def code_index(code_docs):
    return build_index((d, preprocess(c)) for d, c in code_docs)


@pytest.fixture(scope="session")
def eval_records():
    return load_eval_set(fixture_path("eval_queries.jsonl"))


@pytest.fixture
def record_lines():
    def make(**overrides):
        rec = {
            "id": 1,
            "title": "Read a file",
            "question_html": "<p>How?</p><pre><code>FileReader r = null;</code></pre>",
            "answer_html": "<p>Like this</p><pre><code>BufferedReader br = new BufferedReader(r);</code></pre>",
            "tags": ["java"],
            "accepted": True,
        }
        rec.update(overrides)
        return rec

    return make


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    if rep is None:
        return
    status = "SKIP" if rep.skipped else ("PASS" if rep.passed else "FAIL")
    line = f"{status} {request.node.name}: {state['detail']}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
    elif rep.when == "setup" and rep.skipped and "criterion" in item.fixturenames:
        reason = rep.longrepr[2] if isinstance(rep.longrepr, tuple) else ""
        ACCEPTANCE_LINES.append(f"SKIP {item.name}: {reason}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
