#pragma once

// Formal characters under a depth cutoff: finitely supported multisets of
// weights of the form anchor - (nonnegative cone of simple roots), stored by
// their offsets in root coordinates over a fixed merged diagram.

#include <memory>

#include "superdual/reflect.hpp"

namespace superdual::chars {

using Offset = std::vector<long>;

class FormalCharacter {
  public:
    FormalCharacter(std::shared_ptr<const reflect::FundamentalSystem> ctx,
                    weights::Weight anchor, int cutoff);

    const reflect::FundamentalSystem& ctx() const { return *ctx_; }
    std::shared_ptr<const reflect::FundamentalSystem> ctx_ptr() const { return ctx_; }
    const weights::Weight& anchor() const { return anchor_; }
    int cutoff() const { return cutoff_; }
    const std::map<Offset, long long>& terms() const { return terms_; }

    void add(const Offset& o, long long mult);
    long long at(const Offset& o) const;

    weights::Weight weight_of(const Offset& o) const;
    std::map<weights::Weight, long long> weight_terms() const;

    // product: anchors add, cutoff is the minimum, offsets convolve; both
    // factors must share the context.
    FormalCharacter mul(const FormalCharacter& other) const;

    // this += c * other, re-anchoring other's terms onto this anchor; the
    // anchor difference must be a nonnegative integer root vector.
    void accumulate(const FormalCharacter& other, long long c);

    std::string str() const;

  private:
    std::shared_ptr<const reflect::FundamentalSystem> ctx_;
    weights::Weight anchor_;
    int cutoff_;
    std::map<Offset, long long> terms_;
};

// Coordinates of delta over the context's simple-root weights, if any.
std::optional<std::vector<Rat>> root_coordinates(const reflect::FundamentalSystem& ctx,
                                                 const weights::Weight& delta);

long height_of(const Offset& o);

}  // namespace superdual::chars
