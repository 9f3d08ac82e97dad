"""Minimal HTTP front end over one trained model.

Two routes: GET /health for liveness and POST /classify taking a JSON body
{"text": "..."} and answering {"label": "...", "scores": {...}} where the
scores map pairwise separators ("positive/negative") to their raw decision
values. Requests never mutate the model, so concurrent handling is safe.

The body is parsed by hand rather than through a request schema so that
oversized payloads are refused (413) before JSON decoding and malformed
bodies get a uniform 400.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .svm import MulticlassModel, predict
from .vectorize import vectorize_single

MAX_BODY_BYTES = 1_000_000


def create_app(model: MulticlassModel) -> FastAPI:
    app = FastAPI(title="sentisvm", docs_url=None, redoc_url=None, openapi_url=None)

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.post("/classify")
    async def classify(request: Request):
        body = await request.body()
        if len(body) > MAX_BODY_BYTES:
            return JSONResponse(
                {"error": f"body exceeds {MAX_BODY_BYTES} bytes"}, status_code=413
            )
        try:
            doc = json.loads(body)
        except (UnicodeDecodeError, json.JSONDecodeError):
            return JSONResponse({"error": "body is not valid JSON"}, status_code=400)
        if not isinstance(doc, dict) or not isinstance(doc.get("text"), str):
            return JSONResponse(
                {"error": 'body must be an object with a string "text" field'},
                status_code=400,
            )
        instance = vectorize_single(
            doc["text"], model.lexicon, model.scheme, clamp_idf=model.clamp_idf
        )
        label, decisions = predict(model, instance)
        scores = {
            f"{plus.value}/{minus.value}": value
            for (plus, minus), value in decisions.items()
        }
        return {"label": label.value, "scores": scores}

    return app
