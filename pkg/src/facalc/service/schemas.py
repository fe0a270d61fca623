"""Request/response models for the HTTP surface (and the CLI, which shares them)."""

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Rational = Union[str, int]
Number = Union[str, int, float]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PhiRequest(_Model):
    """Evaluate a falling factorial: integer index n (exact) or real index nu."""

    x: Number
    n: Optional[int] = Field(default=None, ge=0)
    nu: Optional[float] = None
    float_mode: bool = False


class ValueResponse(_Model):
    value: Number


class SeriesModel(_Model):
    basis: Literal["factorial"] = "factorial"
    coeffs: list[Number]
    exact: bool = False
    order: int


class SeriesRequest(_Model):
    """Tabulate a named series at integer points, or at one real point."""

    kind: Literal["exp", "cos", "sin", "bessel"]
    lam: Optional[Number] = None
    n: Optional[int] = Field(default=None, ge=0)
    order: Optional[int] = Field(default=None, ge=0)
    points: Optional[list[int]] = None
    at: Optional[float] = None
    float_mode: bool = False


class SeriesRow(_Model):
    x: Number
    value: Number
    remainder: Number


class SeriesResponse(_Model):
    kind: str
    order: int
    columns: list[str]
    rows: list[SeriesRow]


class EquationTermModel(_Model):
    shift: int
    poly: list[Rational]


class EquationModel(_Model):
    terms: list[EquationTermModel]
    rhs: list[Rational] = []


class OperatorTermModel(_Model):
    raising: int
    difference: int
    coeff: str


class OperatorModel(_Model):
    terms: list[OperatorTermModel]


class SolveRequest(_Model):
    equation: EquationModel
    order: int = Field(default=12, ge=1)
    points: Optional[list[int]] = None


class SolutionModel(_Model):
    root: str
    coeffs: list[str]
    formal: bool
    series: Optional[SeriesModel] = None
    residual: Optional[str] = None


class SolveResponse(_Model):
    operator: OperatorModel
    shift: int
    indicial: list[str]
    roots: list[str]
    solutions: list[SolutionModel]
    failures: dict[str, str]
    verified: bool


class HeatRequest(_Model):
    initial: list[Rational]
    steps: int = Field(ge=0)
    verify: bool = False


class HeatResponse(_Model):
    result: list[str]
    oracle_agrees: Optional[bool] = None


class FirstOrderRequest(_Model):
    a: Rational
    b: Rational
    g: list[Rational]
    points: Optional[list[int]] = None
    verify: bool = False


class FirstOrderResponse(_Model):
    y_p: list[str]
    homogeneous_base: str
    residual: str
    oracle_agrees: Optional[bool] = None


class BesselVerifyRequest(_Model):
    n: int = Field(ge=0)
    points: Optional[list[int]] = None


class BesselVerifyResponse(_Model):
    n: int
    forward_step_residual: str
    index_relation_residual: str
    equation_residual: str
    structure_matches: bool
    coefficient_identities: bool
    ok: bool
