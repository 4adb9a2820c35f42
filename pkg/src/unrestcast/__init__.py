"""Forecast planned civil-unrest events from news articles.

The package is organized as a pipeline: ingest news into a corpus store,
preprocess text, learn domain keywords from word embeddings, filter
articles by keyword presence and topic, tag entities, extract relation
triplets, pick out the entities actually involved in the announced event,
normalize future date mentions, and emit forecast records. A FastAPI
service (``unrestcast.service``) exposes every stage; the ``unrestcast``
CLI is a thin client for it.
"""

__version__ = "0.1.0"
