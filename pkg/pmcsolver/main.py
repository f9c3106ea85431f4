"""FastAPI service exposing the solvers."""
import logging
import os
from contextlib import asynccontextmanager
from typing import List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from pmcsolver.config.settings import settings
from pmcsolver.dp.solver import Strategy, solve_fvs, solve_mwis, solve_tw_subgraph
from pmcsolver.errors import GraphParseError, InvalidArgument, SolverError
from pmcsolver.graphs.bitset import VertexSet, from_iterable, to_list
from pmcsolver.graphs.graph import Graph, WeightMap, check_weights, total_weight
from pmcsolver.graphs.recognition import classify
from pmcsolver.separators.minsep import enumerate_minimal_separators, enumerate_pmcs

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager."""
    logger.info(f"Starting PMC solver API ({settings.environment})...")
    yield
    logger.info("Shutting down PMC solver API...")


app = FastAPI(
    title="PMC Solver API",
    description="Maximum-weight induced subgraphs of bounded treewidth via PMC containers",
    version="0.1.0",
    lifespan=lifespan,
)

ALLOWED_ORIGINS = os.getenv("ALLOWED_ORIGINS", "*").split(",")
app.add_middleware(
    CORSMiddleware,
    allow_origins=ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Request/Response models
class GraphPayload(BaseModel):
    """Graph on vertices 0..n-1 with optional per-vertex weights."""
    n: int = Field(ge=0, le=64)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    weights: Optional[List[int]] = None
    budget: Optional[int] = Field(default=None, gt=0)

    def to_graph(self) -> Tuple[Graph, WeightMap]:
        try:
            g = Graph.from_edges(self.n, self.edges)
        except InvalidArgument as e:
            raise GraphParseError(str(e))
        weights = check_weights(g, tuple(self.weights) if self.weights is not None else None)
        return g, weights


class TwSubgraphRequest(GraphPayload):
    """Request model for the bounded-treewidth solver."""
    k: int = Field(ge=1)
    strategy: Strategy = Strategy.ALL_PMCS
    family: Optional[List[List[int]]] = None


class FamilyResponse(BaseModel):
    sets: List[List[int]]
    count: int


class SolutionResponse(BaseModel):
    weight: int
    set: List[int]


def _family_response(family: List[VertexSet]) -> FamilyResponse:
    return FamilyResponse(sets=[to_list(s) for s in family], count=len(family))


def _http_error(endpoint: str, e: SolverError) -> HTTPException:
    logger.error(f"{endpoint} failed: {type(e).__name__}: {e}")
    return HTTPException(status_code=e.status_code, detail=str(e))


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy", "environment": settings.environment}


@app.post("/recognize")
def recognize(payload: GraphPayload):
    """Class membership report with witnesses."""
    try:
        g, _ = payload.to_graph()
        return classify(g).to_cli_json()
    except SolverError as e:
        raise _http_error("recognize", e)


@app.post("/separators", response_model=FamilyResponse)
def separators(payload: GraphPayload):
    """All minimal separators in canonical order."""
    try:
        g, _ = payload.to_graph()
        return _family_response(enumerate_minimal_separators(g, payload.budget))
    except SolverError as e:
        raise _http_error("separators", e)


@app.post("/pmcs", response_model=FamilyResponse)
def pmcs(payload: GraphPayload):
    """All potential maximal cliques in canonical order."""
    try:
        g, _ = payload.to_graph()
        records = enumerate_pmcs(g, payload.budget)
        return _family_response([record.omega for record in records])
    except SolverError as e:
        raise _http_error("pmcs", e)


@app.post("/mwis", response_model=SolutionResponse)
def mwis(payload: GraphPayload):
    """Maximum-weight independent set of a long-hole-free graph."""
    try:
        g, weights = payload.to_graph()
        solution = solve_mwis(g, weights)
        logger.info(f"MWIS request on {g}: weight {total_weight(weights, solution)}")
        return SolutionResponse(weight=total_weight(weights, solution), set=to_list(solution))
    except SolverError as e:
        raise _http_error("mwis", e)


@app.post("/fvs", response_model=SolutionResponse)
def fvs(payload: GraphPayload):
    """Minimum feedback vertex set of a P5-free graph."""
    try:
        g, _ = payload.to_graph()
        solution = solve_fvs(g)
        return SolutionResponse(weight=solution.bit_count(), set=to_list(solution))
    except SolverError as e:
        raise _http_error("fvs", e)


@app.post("/tw-subgraph", response_model=SolutionResponse)
def tw_subgraph(request: TwSubgraphRequest):
    """Maximum-weight induced subgraph of treewidth below k."""
    try:
        g, weights = request.to_graph()
        family = None
        if request.family is not None:
            if any(not 0 <= v < g.n for members in request.family for v in members):
                raise InvalidArgument("family sets must use vertices 0..n-1")
            family = [from_iterable(members) for members in request.family]
        solution = solve_tw_subgraph(g, weights, request.k, request.strategy, family, request.budget)
        return SolutionResponse(weight=total_weight(weights, solution), set=to_list(solution))
    except SolverError as e:
        raise _http_error("tw-subgraph", e)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
