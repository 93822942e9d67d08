import pytest

from dnfusion import DNumber, Frame, five_level_scale


@pytest.fixture(scope="session")
def scale():
    return five_level_scale()


@pytest.fixture(scope="session")
def score_frame():
    return Frame(("low", "fairly low", "medium", "fairly high", "high"))


@pytest.fixture()
def expert_pair(score_frame):
    # Two assessments of one component on the five-level scale; the masses on
    # {low, fairly low} and {medium} disagree strongly, which is what makes
    # the discount-then-combine pipeline interesting.
    d1 = DNumber(
        score_frame,
        {
            ("low",): 0.12,
            ("low", "fairly low"): 0.7,
            ("medium",): 0.02,
            ("high", "medium"): 0.1,
            ("fairly high",): 0.06,
        },
    )
    d2 = DNumber(
        score_frame,
        {
            ("low",): 0.1,
            ("low", "fairly low"): 0.06,
            ("medium",): 0.6,
            ("high", "medium"): 0.2,
            ("fairly high",): 0.04,
        },
    )
    return d1, d2
