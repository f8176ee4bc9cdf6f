// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The set-function abstraction.
//
// A set function is any immutable object exposing `ground_size()` and a
// const call operator on Subset. Algorithms are templates over the
// SetFunction concept; AnySetFunction erases the type where a runtime choice
// is needed (CLI, experiment harness). Evaluation must be deterministic and
// safe to call concurrently.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "apxsub/subset.hpp"

namespace apxsub {

template <typename F>
concept SetFunction = requires(const F& f, const Subset& s) {
  { f.ground_size() } -> std::convertible_to<int>;
  { f(s) } -> std::convertible_to<double>;
};

inline void check_universe(const Subset& s, int n) {
  if (s.universe() != n) {
    throw std::out_of_range("subset over " + std::to_string(s.universe()) +
                            " elements passed to a function on " +
                            std::to_string(n));
  }
}

class AnySetFunction {
 public:
  AnySetFunction() = default;

  template <SetFunction F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, AnySetFunction>)
  AnySetFunction(F f)  // NOLINT(google-explicit-constructor)
      : impl_(std::make_shared<const Model<F>>(std::move(f))) {}

  int ground_size() const { return impl_->ground_size(); }
  double operator()(const Subset& s) const { return impl_->eval(s); }
  explicit operator bool() const { return impl_ != nullptr; }

  // Access to the wrapped object when its type is known.
  template <typename F>
  const F* target() const {
    auto* m = dynamic_cast<const Model<F>*>(impl_.get());
    return m == nullptr ? nullptr : &m->f;
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual int ground_size() const = 0;
    virtual double eval(const Subset& s) const = 0;
  };
  template <typename F>
  struct Model final : Concept {
    explicit Model(F fn) : f(std::move(fn)) {}
    int ground_size() const override { return f.ground_size(); }
    double eval(const Subset& s) const override { return f(s); }
    F f;
  };

  std::shared_ptr<const Concept> impl_;
};

// Values of f stored for every subset, indexed by bitmask.
class ExplicitFunction {
 public:
  ExplicitFunction(int n, std::vector<double> table)
      : n_(n), table_(std::move(table)) {
    require_dense(n_);
    if (n_ < 1) throw std::invalid_argument("explicit function needs n >= 1");
    if (table_.size() != (std::size_t{1} << n_)) {
      throw std::invalid_argument("table length must be 2^n");
    }
  }

  int ground_size() const { return n_; }
  double operator()(const Subset& s) const {
    check_universe(s, n_);
    return table_[s.mask()];
  }
  double at(Mask m) const { return table_[m]; }
  const std::vector<double>& table() const { return table_; }

 private:
  int n_;
  std::vector<double> table_;
};

// f(S) = offset + sum of weights over S.
class ModularFunction {
 public:
  explicit ModularFunction(std::vector<double> weights, double offset = 0.0)
      : weights_(std::move(weights)), offset_(offset) {
    if (weights_.empty()) throw std::invalid_argument("no weights");
  }
  int ground_size() const { return static_cast<int>(weights_.size()); }
  double operator()(const Subset& s) const {
    check_universe(s, ground_size());
    double v = offset_;
    s.for_each([&](int e) { v += weights_[e]; });
    return v;
  }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  double offset_;
};

// f(S) = phi(|S|).
class CardinalityFunction {
 public:
  CardinalityFunction(int n, std::function<double(int)> phi)
      : n_(n), phi_(std::move(phi)) {
    if (n < 1) throw std::invalid_argument("ground set needs n >= 1");
  }
  int ground_size() const { return n_; }
  double operator()(const Subset& s) const {
    check_universe(s, n_);
    return phi_(s.size());
  }
  double of_size(int k) const { return phi_(k); }

 private:
  int n_;
  std::function<double(int)> phi_;
};

// Arbitrary callable over subsets.
class LambdaFunction {
 public:
  LambdaFunction(int n, std::function<double(const Subset&)> fn)
      : n_(n), fn_(std::move(fn)) {
    if (n < 1) throw std::invalid_argument("ground set needs n >= 1");
  }
  int ground_size() const { return n_; }
  double operator()(const Subset& s) const {
    check_universe(s, n_);
    return fn_(s);
  }

 private:
  int n_;
  std::function<double(const Subset&)> fn_;
};

// c * f + shift.
template <SetFunction F>
class AffineFunction {
 public:
  AffineFunction(F base, double scale, double shift)
      : base_(std::move(base)), scale_(scale), shift_(shift) {}
  int ground_size() const { return base_.ground_size(); }
  double operator()(const Subset& s) const { return scale_ * base_(s) + shift_; }

 private:
  F base_;
  double scale_;
  double shift_;
};

template <SetFunction F>
ExplicitFunction to_explicit(const F& f) {
  const int n = f.ground_size();
  require_dense(n);
  if constexpr (std::is_same_v<F, ExplicitFunction>) {
    return f;
  } else {
    if constexpr (std::is_same_v<F, AnySetFunction>) {
      if (const auto* e = f.template target<ExplicitFunction>()) return *e;
    }
    const Mask count = Mask{1} << n;
    std::vector<double> table(count);
    for (Mask m = 0; m < count; ++m) table[m] = f(Subset::from_mask(n, m));
    return ExplicitFunction(n, std::move(table));
  }
}

// Text format: "n <N>" followed by 2^N lines "<bitmask> <value>" in
// increasing bitmask order.
inline void write_explicit(std::ostream& out, const ExplicitFunction& f) {
  out << "n " << f.ground_size() << '\n';
  char buf[64];
  for (Mask m = 0; m < f.table().size(); ++m) {
    std::snprintf(buf, sizeof(buf), "%.17g", f.at(m));
    out << m << ' ' << buf << '\n';
  }
}

inline ExplicitFunction read_explicit(std::istream& in) {
  std::string line;
  int n = 0;
  long line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("explicit function, line " +
                             std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag >> n) || tag != "n") fail("expected header 'n <integer>'");
    break;
  }
  if (n < 1) fail("missing or invalid header");
  require_dense(n);
  std::vector<double> table(std::size_t{1} << n);
  Mask expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Mask m = 0;
    double v = 0.0;
    if (!(ls >> m >> v)) fail("expected '<bitmask> <value>'");
    if (expected >= table.size()) fail("too many rows");
    if (m != expected) fail("rows must be in increasing bitmask order");
    table[m] = v;
    ++expected;
  }
  if (expected != table.size()) {
    fail("expected " + std::to_string(table.size()) + " rows, got " +
         std::to_string(expected));
  }
  return ExplicitFunction(n, std::move(table));
}

inline ExplicitFunction load_explicit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_explicit(in);
}

inline void save_explicit(const std::string& path, const ExplicitFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_explicit(out, f);
}

}  // namespace apxsub
