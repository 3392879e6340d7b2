#pragma once

// Integer partitions with weakly decreasing positive parts.

#include <string>
#include <vector>

#include "superdual/numeric.hpp"

namespace superdual::symfunc {

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw DomainError("parts must be weakly decreasing and positive");
        }
    }

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long size() const {
        long s = 0;
        for (auto p : parts_) s += p;
        return s;
    }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;                       // "(3,1)" or "()"
    static Partition parse(const std::string& s);  // "3,1" or "" or "(3,1)"

    static std::vector<Partition> all_of_size(long n);
    static std::vector<Partition> all_up_to_size(long n);

  private:
    std::vector<long> parts_;
};

}  // namespace superdual::symfunc
