#pragma once

#include <stdexcept>

namespace su2ent {

// Spin lengths and magnetic quantum numbers are stored doubled (2S, 2J, 2m)
// so that half-integer values stay exact integers.
struct TwiceSpin {
  int value;

  TwiceSpin(int v) : value(v) {
    if (v < 0) throw std::invalid_argument("TwiceSpin: negative doubled spin");
  }

  // Hilbert-space dimension 2S+1.
  int dim() const { return value + 1; }
  // Physical spin length S.
  double spin() const { return value / 2.0; }
  // S(S+1).
  double casimir() const { return value * (value + 2) / 4.0; }

  friend bool operator==(TwiceSpin a, TwiceSpin b) { return a.value == b.value; }
  friend bool operator!=(TwiceSpin a, TwiceSpin b) { return a.value != b.value; }
};

}  // namespace su2ent
