"""
FastAPI REST API for monochromatic analysis
Provides HTTP endpoints for covers, partitions, constructions and suites
"""

from typing import Any, Dict, List, Optional

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import __version__
from .analysis_system import create_analysis_system
from .config import get_settings
from .graphs.constructions import ConstructionSpec, build
from .graphs.graph_core import GraphError, from_text, to_text
from .harness.suites import SUITE_IDS, SuiteRunner
from .harness.verifier import CertificateVerifier

# Initialize FastAPI app
app = FastAPI(
    title="Monochromatic Components API",
    description="Covers and partitions of edge-coloured graphs by monochromatic components",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

analysis_system = create_analysis_system(verbose=False, settings=get_settings())
verifier = CertificateVerifier()


# Request/Response Models
class GraphRequest(BaseModel):
    graph: str = Field(..., description='Graph in the "n r" + "u v c" text format')


class CoverRequest(GraphRequest):
    method: str = Field("koenig", description="koenig | exact")


class PartitionRequest(GraphRequest):
    method: str = Field("exact", description="exact | heuristic")
    seed: Optional[int] = None
    budget: Optional[int] = Field(None, ge=1)


class DistinctCoverRequest(GraphRequest):
    method: str = Field("exact", description="exact | constructive")


class CertificateResponse(BaseModel):
    found: bool
    certificate: Optional[Dict[str, Any]] = None
    verification: Optional[Dict[str, Any]] = None


def _parse(text: str):
    try:
        return from_text(text)
    except GraphError as e:
        raise HTTPException(status_code=422, detail=str(e))


def _run(step):
    try:
        return step()
    except GraphError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error during analysis: {str(e)}")


# API Endpoints
@app.get("/")
def root():
    """Root endpoint"""
    return {
        "message": "Monochromatic Components API",
        "version": __version__,
        "endpoints": {
            "analyze": "/api/analyze",
            "cover": "/api/cover",
            "partition": "/api/partition",
            "distinct_cover": "/api/distinct-cover",
            "construct": "/api/construct",
            "suites": "/api/suites",
            "health": "/api/health",
        },
    }


@app.get("/api/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "version": __version__}


@app.get("/api/suites")
def list_suites() -> Dict[str, List[Dict[str, str]]]:
    """Registered verification suites"""
    runner = SuiteRunner()
    return {"suites": [{"id": suite_id, "description": runner.describe(suite_id)} for suite_id in SUITE_IDS]}


@app.post("/api/analyze")
def analyze(request: GraphRequest):
    g = _parse(request.graph)
    return _run(lambda: analysis_system.analyze(g).to_dict())


@app.post("/api/cover", response_model=CertificateResponse)
def cover(request: CoverRequest):
    g = _parse(request.graph)
    result = _run(lambda: analysis_system.cover(g, request.method))
    return CertificateResponse(found=True, certificate=result.to_dict(),
                               verification=verifier.check_cover(g, result).to_dict())


@app.post("/api/partition", response_model=CertificateResponse)
def partition(request: PartitionRequest):
    g = _parse(request.graph)
    result = _run(lambda: analysis_system.partition(g, request.method, request.seed, request.budget))
    if result is None:
        return CertificateResponse(found=False)
    return CertificateResponse(found=True, certificate=result.to_dict(),
                               verification=verifier.check_partition(g, result).to_dict())


@app.post("/api/distinct-cover", response_model=CertificateResponse)
def distinct_cover(request: DistinctCoverRequest):
    g = _parse(request.graph)
    result = _run(lambda: analysis_system.distinct_cover(g, request.method))
    if result is None:
        return CertificateResponse(found=False)
    return CertificateResponse(found=True, certificate=result.to_dict(),
                               verification=verifier.check_cover(g, result, distinct=True).to_dict())


@app.post("/api/construct")
def construct(spec: ConstructionSpec):
    g = _run(lambda: build(spec))
    return {"graph": to_text(g), "n": g.n, "r": g.r}


def start_server(host: str = "0.0.0.0", port: int = 8000):
    """Start the API server"""
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    print("\n" + "=" * 70)
    print("🚀 Starting Monochromatic Components API Server")
    print("=" * 70)
    print("\nServer will be available at: http://localhost:8000")
    print("API Documentation: http://localhost:8000/docs")
    print("\n" + "=" * 70 + "\n")

    start_server()
