"""명령 요청 스키마 검증 테스트"""
import pytest
from pydantic import ValidationError

from src.core.exceptions import UsageError
from src.presentation.schemas.commands import RunConfig


class TestRunConfig:
    """RunConfig 불변 조건"""

    def test_valid_ktheory(self):
        config = RunConfig(command="ktheory", graphs=["g.graph"], q="a=1/3,b=1")
        assert config.output == "json"
        assert config.radius == 4

    @pytest.mark.parametrize("q", ["0", "3/2", "a=1/2,b=0"])
    def test_q_out_of_range(self, q):
        with pytest.raises(ValidationError):
            RunConfig(command="ktheory", graphs=["g.graph"], q=q)

    def test_malformed_q(self):
        with pytest.raises(UsageError):
            RunConfig(command="ktheory", graphs=["g.graph"], q="one third")

    def test_negative_radius(self):
        with pytest.raises(ValidationError):
            RunConfig(command="growth", graphs=["g.graph"], radius=-1)

    def test_tolerance_positive(self):
        with pytest.raises(ValidationError):
            RunConfig(command="verify", graphs=["g.graph"], tolerance=0)

    def test_compare_needs_two_graphs(self):
        with pytest.raises(ValidationError):
            RunConfig(command="compare", graphs=["g.graph"])

    def test_classify_needs_parameters(self):
        with pytest.raises(ValidationError):
            RunConfig(command="classify", n=3, q1="1/2")

    def test_classify_q_range(self):
        with pytest.raises(ValidationError):
            RunConfig(command="classify", n=3, q1="1/2", q2="2")

    def test_reproduce_needs_nothing(self):
        assert RunConfig(command="reproduce").graphs == []
