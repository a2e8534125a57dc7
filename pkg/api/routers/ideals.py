from fastapi import APIRouter, HTTPException
from typing import Dict, Sequence

from schemas.ideal_schema import (
    CertificateResponse, IdealRequest, IdealResponse, InvariantsResponse,
    MonomialIdeal, MonomialRequest, PowerRequest, WeightRequest,
)
from services import ideal_service, newton_service, normality_service
from services.notation_service import format_ideal, format_monomial, ideal_from_request, parse_monomial

router = APIRouter(
    prefix="/ideals",
    tags=["Ideals"],
    responses={400: {"description": "Malformed ideal or parameters"}},
)


def _ideal_response(I: MonomialIdeal, variables: Sequence[str]) -> IdealResponse:
    return IdealResponse(
        vars=list(variables),
        generators=[list(g) for g in I.generators],
        text=format_ideal(I, variables),
        mu=ideal_service.mu(I),
    )


@router.post("/closure", response_model=IdealResponse)
def closure(request: IdealRequest):
    """
    Returns the minimal generators of the integral closure.
    """
    try:
        I, variables = ideal_from_request(request)
        return _ideal_response(newton_service.integral_closure(I), variables)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/is-closed")
def is_closed(request: IdealRequest) -> Dict:
    try:
        I, variables = ideal_from_request(request)
        return {"ideal": format_ideal(I, variables), "is_closed": normality_service.is_integrally_closed(I)}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/invariants", response_model=InvariantsResponse)
def invariants(request: IdealRequest):
    """
    mu, colength ("infinite" unless m-primary), v(R/I), number of variables
    among the generators, and the m-adic order (absent for the zero ideal).
    """
    try:
        I, variables = ideal_from_request(request)
        return InvariantsResponse(
            vars=variables,
            text=format_ideal(I, variables),
            mu=ideal_service.mu(I),
            colength=ideal_service.colength(I),
            v_quotient=ideal_service.v_quotient(I),
            rsop_count=ideal_service.rsop_count(I),
            m_primary=ideal_service.is_m_primary(I),
            order=None if I.is_zero else ideal_service.order(I),
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/power-closure", response_model=IdealResponse)
def power_closure(request: PowerRequest):
    """
    Returns the integral closure of I^n.
    """
    try:
        I, variables = ideal_from_request(request)
        return _ideal_response(normality_service.closure_of_power(I, request.n), variables)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/certificate", response_model=CertificateResponse)
def certificate(request: MonomialRequest):
    """
    Decides whether the monomial lies in the closure of I^n and, if so,
    returns an integer certificate of integral dependence.
    """
    try:
        I, variables = ideal_from_request(request)
        m = parse_monomial(request.monomial, variables)
        cert = newton_service.certificate(I, m, request.n)
        return CertificateResponse(member=cert is not None, monomial=format_monomial(m, variables), certificate=cert)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/order")
def order(request: WeightRequest) -> Dict:
    """
    Order under the monomial valuation with the given rational weights.
    """
    try:
        I, _ = ideal_from_request(request)
        weights = [newton_service.parse_weight(w) for w in request.weights]
        return {"weights": [str(w) for w in weights], "order": str(newton_service.ord_w(I, weights))}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
