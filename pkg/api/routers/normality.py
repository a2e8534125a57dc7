from fastapi import APIRouter, HTTPException

from schemas.ideal_schema import PowerRequest
from schemas.normality_schema import NormalityReport, NormalityRequest, WitnessResponse
from services import normality_service
from services.notation_service import format_monomial, ideal_from_request

router = APIRouter(
    prefix="/normality",
    tags=["Normality"],
    responses={400: {"description": "Malformed ideal or parameters"}},
)


@router.post("/is-normal", response_model=NormalityReport)
def is_normal(request: NormalityRequest):
    """
    Checks I, I^2, ... up to max_power (default d - 1) for integral
    closedness and reports the first failure.
    """
    try:
        I, _ = ideal_from_request(request)
        return normality_service.is_normal(I, request.max_power)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/witness", response_model=WitnessResponse)
def witness(request: PowerRequest):
    """
    Least minimal monomial of closure(I^n) outside I^n, or null.
    """
    try:
        I, variables = ideal_from_request(request)
        w = normality_service.first_failure_witness(I, request.n)
        return WitnessResponse(n=request.n, witness=w, monomial=None if w is None else format_monomial(w, variables))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
