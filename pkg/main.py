from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from core.config import settings
from core.log_config import configure_logging

configure_logging(settings.LOG_LEVEL)

app = FastAPI(
    title="Rees Normality API",
    description="Integral closure, normality and invariants of monomial ideals.",
    version="0.1.0",
)

if settings.CORS_ORIGINS:
    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.CORS_ORIGINS,
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )


@app.get("/", tags=["Root"])
def read_root():
    return {"name": app.title, "version": app.version, "docs": "/docs"}


from api.routers import ideals, normality, verify  # noqa: E402

app.include_router(ideals.router, prefix="/api")
app.include_router(normality.router, prefix="/api")
app.include_router(verify.router, prefix="/api")
