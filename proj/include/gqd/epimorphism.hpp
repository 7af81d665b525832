#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gqd/group.hpp"
#include "gqd/signature.hpp"

namespace gqd {

enum class Mode { RiemannSurface, BorderedKlein, UnborderedKlein };

const char* to_string(Mode m);
Mode parse_mode(const std::string& s);  // riemann | bordered | unbordered
KernelKind kernel_kind(Mode m);

struct ActionContext {
  Signature sig;
  Presentation pres;
  GroupPtr group;
  Mode mode = Mode::RiemannSurface;
  std::optional<Subgroup> target;  // G^+, index <= 2
};
using ContextPtr = std::shared_ptr<const ActionContext>;

ContextPtr make_context(const Signature& sig, GroupPtr G, Mode mode, std::optional<Subgroup> target = std::nullopt);

struct GeneratingVector {
  ContextPtr ctx;
  std::vector<int> images;  // aligned with ctx->pres.gens

  int operator[](size_t k) const { return images[k]; }
  int image(GenKind k, int i, int j = 0) const;
  int eval(const Word& w) const;
  std::string text() const;  // one "kind:index -> element" per line
};

// build from "symbol=element" pairs, e.g. {{"beta1","y"},{"d1","yx"}}
GeneratingVector make_vector(ContextPtr ctx, const std::vector<std::pair<std::string, std::string>>& images);
GeneratingVector make_vector(ContextPtr ctx, std::vector<int> images);

struct CheckResult {
  bool ok = true;
  std::string diagnosis = "ok";
};

CheckResult check_images(const ActionContext& ctx, const std::vector<int>& images, bool require_surjective = true);
CheckResult check_vector(const GeneratingVector& v, bool require_surjective = true);

// image of the orientation preserving half under the vector
std::vector<char> positive_image(const ActionContext& ctx, const std::vector<int>& images);

struct EnumOptions {
  int workers = 0;  // 0: OpenMP default, 1: serial
  bool require_surjective = true;
};

using VectorPredicate = std::function<bool(const GeneratingVector&)>;

// throws IncompatibleOrder / DomainError on precondition failure
void validate_context(const ActionContext& ctx);

std::vector<GeneratingVector> enumerate_vectors(ContextPtr ctx, const EnumOptions& opt = {});
// serial reference implementation of the same search
std::vector<GeneratingVector> enumerate_vectors_serial(ContextPtr ctx, bool require_surjective = true);
// first vector (in search order) satisfying pred; deterministic for any worker count
std::optional<GeneratingVector> find_vector(ContextPtr ctx, const VectorPredicate& pred = nullptr, int workers = 0);
bool admissible(ContextPtr ctx, int workers = 0);
long count_vectors(ContextPtr ctx, const EnumOptions& opt = {});

}  // namespace gqd
