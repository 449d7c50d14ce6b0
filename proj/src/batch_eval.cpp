#include "mvmodal/batch_eval.hpp"

#include <algorithm>
#include <cstring>

namespace mvmodal {

BatchEvaluator::BatchEvaluator(const WorldTypes& types, Variant v, std::string pi_atom,
                               const simd::KernelTable* kernels)
    : types_(types),
      v_(v),
      pi_atom_(std::move(pi_atom)),
      k_(kernels ? *kernels : simd::kernels()),
      d_(static_cast<std::uint8_t>(types.resolution().denominator())) {}

void BatchEvaluator::load(const ModelBatch& batch) {
  trim(0);
  batch_ = &batch;
  cells_ = static_cast<std::size_t>(batch.rows) * batch.lanes;
  if (v_ != Variant::Mvs5 || !pi_atom_.empty()) {
    if (batch.pi.size() != cells_) throw Error("batch has no possibility distribution");
  }
  if (!batch.pi.empty()) {
    npi_.resize(cells_);
    k_.neg(d_, batch.pi.data(), npi_.data(), cells_);
  }
  lane_acc_.resize(batch.lanes);
}

std::vector<std::uint8_t> BatchEvaluator::acquire() {
  std::vector<std::uint8_t> buf;
  if (!pool_.empty()) {
    buf = std::move(pool_.back());
    pool_.pop_back();
  }
  buf.resize(cells_);
  return buf;
}

const std::uint8_t* BatchEvaluator::store(const Formula& f, std::vector<std::uint8_t> buf) {
  cached_bytes_ += buf.capacity();
  auto [it, fresh] = cache_.emplace(f.id(), Entry{f, std::move(buf)});
  return it->second.buf.data();
}

void BatchEvaluator::trim(std::size_t budget_bytes) {
  if (cached_bytes_ <= budget_bytes) return;
  for (auto& [id, e] : cache_) {
    if (pool_.size() < 64) pool_.push_back(std::move(e.buf));
  }
  cache_.clear();
  cached_bytes_ = 0;
}

void BatchEvaluator::reduce_broadcast(const std::uint8_t* in, std::uint8_t* out, bool use_max) {
  const std::size_t lanes = batch_->lanes;
  std::memcpy(lane_acc_.data(), in, lanes);
  for (int r = 1; r < batch_->rows; ++r) {
    const std::uint8_t* row = in + static_cast<std::size_t>(r) * lanes;
    if (use_max) {
      k_.max_into(row, lane_acc_.data(), lanes);
    } else {
      k_.min_into(row, lane_acc_.data(), lanes);
    }
  }
  for (int r = 0; r < batch_->rows; ++r) {
    std::memcpy(out + static_cast<std::size_t>(r) * lanes, lane_acc_.data(), lanes);
  }
}

const std::uint8_t* BatchEvaluator::table(const Formula& f) {
  auto hit = cache_.find(f.id());
  if (hit != cache_.end()) return hit->second.buf.data();
  const ModelBatch& b = *batch_;
  std::vector<std::uint8_t> out = acquire();
  std::uint8_t* o = out.data();
  switch (f.op()) {
    case Op::Atom: {
      if (!pi_atom_.empty() && f.name() == pi_atom_) {
        std::memcpy(o, b.pi.data(), cells_);
        break;
      }
      const auto& atoms = types_.atoms();
      auto it = std::find(atoms.begin(), atoms.end(), f.name());
      if (it == atoms.end()) {
        if (f.name() != kTruePlaceholder) throw EvalError("atom '" + f.name() + "' is not enumerated");
        std::memset(o, 0, cells_);
        break;
      }
      std::size_t a = static_cast<std::size_t>(it - atoms.begin());
      for (std::size_t c = 0; c < cells_; ++c) o[c] = types_.digit(b.type[c], a);
      break;
    }
    case Op::Neg:
      k_.neg(d_, table(f.child(0)), o, cells_);
      break;
    case Op::Coef:
      k_.coef(d_, static_cast<std::uint8_t>(f.value().num()), table(f.child(0)), o, cells_);
      break;
    case Op::Imp:
      k_.imp(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::Min:
      k_.tmin(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::Max:
      k_.tmax(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::SConj:
      k_.sconj(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::SDisj:
      k_.sdisj(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::Iff:
      k_.iff(d_, table(f.lhs()), table(f.rhs()), o, cells_);
      break;
    case Op::Dia:
    case Op::Box: {
      const std::uint8_t* a = table(f.child(0));
      bool dia = f.op() == Op::Dia;
      if (v_ == Variant::Mvs5) {
        reduce_broadcast(a, o, dia);
        break;
      }
      std::vector<std::uint8_t> tmp = acquire();
      if (v_ == Variant::Mvkd45) {
        if (dia) {
          k_.tmin(d_, b.pi.data(), a, tmp.data(), cells_);
        } else {
          k_.tmax(d_, npi_.data(), a, tmp.data(), cells_);
        }
      } else if (v_ == Variant::AltBox) {
        if (dia) {
          k_.sconj(d_, b.pi.data(), a, tmp.data(), cells_);
        } else {
          k_.imp(d_, b.pi.data(), a, tmp.data(), cells_);
        }
      } else {
        throw EvalError("box and dia are not part of the qfl2 language");
      }
      reduce_broadcast(tmp.data(), o, dia);
      pool_.push_back(std::move(tmp));
      break;
    }
    case Op::Comp: {
      if (v_ != Variant::Qfl2) throw EvalError("'<|' is interpreted only by the qfl2 variant");
      const std::uint8_t* a = table(f.lhs());
      const std::uint8_t* c = table(f.rhs());
      std::vector<std::uint8_t> pa = acquire();
      std::vector<std::uint8_t> pb = acquire();
      k_.tmin(d_, b.pi.data(), a, pa.data(), cells_);
      reduce_broadcast(pa.data(), pa.data(), true);
      k_.tmin(d_, b.pi.data(), c, pb.data(), cells_);
      reduce_broadcast(pb.data(), pb.data(), true);
      k_.imp(d_, pa.data(), pb.data(), o, cells_);
      pool_.push_back(std::move(pa));
      pool_.push_back(std::move(pb));
      break;
    }
    default:
      throw InternalError("sugar node reached the batch evaluator");
  }
  return store(f, std::move(out));
}

std::optional<std::pair<std::size_t, int>> BatchEvaluator::first_failure(const std::uint8_t* t) {
  const std::size_t lanes = batch_->lanes;
  std::memcpy(lane_acc_.data(), t, lanes);
  for (int r = 1; r < batch_->rows; ++r) k_.min_into(t + static_cast<std::size_t>(r) * lanes, lane_acc_.data(), lanes);
  std::size_t lane = k_.find_ne(d_, lane_acc_.data(), lanes);
  if (lane == lanes) return std::nullopt;
  for (int r = 0; r < batch_->rows; ++r) {
    if (t[static_cast<std::size_t>(r) * lanes + lane] != d_) return std::make_pair(lane, r);
  }
  throw InternalError("lane minimum disagrees with its rows");
}

}  // namespace mvmodal
