import pytest

from heartspec.matcher import TrainingRecord
from heartspec.pipeline import clip_to_pixels
from heartspec.synthgen import corpus_specs, synth_clip


def corpus_records(n_per_class=10, **kwargs):
    return [
        TrainingRecord(s.class_kind.value, clip_to_pixels(synth_clip(s)), f"{s.class_kind.value}/{s.seed}")
        for s in corpus_specs(n_per_class, **kwargs)
    ]


@pytest.fixture(scope="session")
def synth_records():
    """The 30-clip acceptance corpus (10 per class, default seeds)."""
    return corpus_records()


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and rep.passed):
        return
    number, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    prev = _ACCEPTANCE.get(number)
    passed = rep.passed and (prev is None or prev[1])
    _ACCEPTANCE[number] = (title, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)
