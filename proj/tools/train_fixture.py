# Copyright 2026 The mlpsol Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fits the shipped 1L1N fixture: logistic regression by full-batch gradient descent.

Usage: train_fixture.py TRAIN_CSV OUT_JSON [--name NAME]
"""

import argparse
import collections
import json

import numpy as np

LEARNING_RATE = 0.5
EPOCHS = 2000
L2 = 1e-3
DECIMALS = 6


def load_csv(path):
  data = np.genfromtxt(path, delimiter=",", skip_header=1, dtype=np.float64)
  return data[:, :-1], data[:, -1]


def fit(features, labels):
  rows, dim = features.shape
  weights = np.zeros(dim)
  bias = 0.0
  for _ in range(EPOCHS):
    logits = features @ weights + bias
    probs = 1.0 / (1.0 + np.exp(-logits))
    residual = probs - labels
    weights -= LEARNING_RATE * (features.T @ residual / rows + L2 * weights)
    bias -= LEARNING_RATE * residual.mean()
  return weights, bias


def fmt(value):
  """Canonical decimal text: no trailing zeros, no negative zero."""
  text = f"{round(float(value), DECIMALS):.{DECIMALS}f}".rstrip("0").rstrip(".")
  return "0" if text in ("-0", "") else text


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("train_csv")
  parser.add_argument("out_json")
  parser.add_argument("--name", default="trained_1l1n")
  args = parser.parse_args()

  features, labels = load_csv(args.train_csv)
  weights, bias = fit(features, labels)
  model = collections.OrderedDict(
      name=args.name,
      input_dim=int(features.shape[1]),
      layers=[
          collections.OrderedDict(
              neurons=1,
              activation="sigmoid",
              weights=[[fmt(w) for w in weights]],
              biases=[fmt(bias)],
          )
      ],
  )
  with open(args.out_json, "w", encoding="utf-8") as out:
    json.dump(model, out, indent=1)
    out.write("\n")


if __name__ == "__main__":
  main()
