from fastapi import APIRouter, HTTPException, Query
from typing import List, Optional

from schemas.verify_schema import CheckReport
from services import verify_service

router = APIRouter(
    prefix="/verify",
    tags=["Verification"],
    responses={404: {"description": "Unknown sweep family"}},
)


@router.get("/paper", response_model=List[CheckReport])
def verify_paper(seed: Optional[int] = Query(None, ge=0, lt=1 << 64), trials: Optional[int] = Query(None, ge=0)):
    """
    Runs the worked examples, both sweeps and every corpus check.
    This is slow with the default number of trials.
    """
    try:
        return verify_service.verify_paper(seed=seed, trials=trials)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.get("/sweep/{family}", response_model=CheckReport)
def sweep(family: str, a_max: int = Query(8, ge=2), c_max: Optional[int] = Query(None, ge=2)):
    """
    Sweeps the lemma-dim2 family (a_max, c_max default 8, 16) or the
    thm-dim3 family (c_max default 12).
    """
    if family not in ("lemma-dim2", "thm-dim3"):
        raise HTTPException(status_code=404, detail=f"Unknown sweep family '{family}'.")
    try:
        if family == "lemma-dim2":
            c_max = c_max or 16
            records = verify_service.sweep_lemma_dim2(a_max, c_max)
            return verify_service.sweep_report("sweep_lemma_dim2", {"a_max": a_max, "c_max": c_max}, records)
        c_max = c_max or 12
        records = verify_service.sweep_theorem_dim3(c_max)
        return verify_service.sweep_report("sweep_theorem_dim3", {"c_max": c_max}, records)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
