#include "qcs/comm.hpp"

#include <algorithm>
#include <cmath>

namespace qcs {

Topology Topology::two_party(TopologyKind k) {
    if (k != TopologyKind::TwoPartyOneWayAtoB && k != TopologyKind::TwoPartyOneWayBtoA &&
        k != TopologyKind::TwoPartyTwoWay)
        throw ContractError("two_party: not a two-party kind");
    return Topology{k, 2};
}

Topology Topology::smp(int parties) {
    if (parties < 2) throw ContractError("smp requires at least 2 parties");
    return Topology{TopologyKind::Smp, parties};
}

Topology Topology::coordinator(int parties) {
    if (parties < 2) throw ContractError("coordinator requires at least 2 parties");
    return Topology{TopologyKind::Coordinator, parties};
}

bool Topology::direction_legal(int from, int to) const {
    if (from == to) return false;
    switch (kind) {
        case TopologyKind::TwoPartyOneWayAtoB:
            return from == 0 && to == 1;
        case TopologyKind::TwoPartyOneWayBtoA:
            return from == 1 && to == 0;
        case TopologyKind::TwoPartyTwoWay:
            return (from == 0 || from == 1) && (to == 0 || to == 1);
        case TopologyKind::Smp:
            // Parties speak to the referee; the referee never speaks.
            return from != kReferee && to == kReferee;
        case TopologyKind::Coordinator:
            return (from == kReferee) != (to == kReferee);
    }
    return false;
}

std::string topology_name(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::TwoPartyOneWayAtoB: return "two_party_one_way_AtoB";
        case TopologyKind::TwoPartyOneWayBtoA: return "two_party_one_way_BtoA";
        case TopologyKind::TwoPartyTwoWay: return "two_party_two_way";
        case TopologyKind::Smp: return "smp";
        case TopologyKind::Coordinator: return "coordinator";
    }
    return "?";
}

void MessageLedger::record(int sender, int receiver, long qubits, long bits) {
    if ((qubits > 0) == (bits > 0))
        throw ContractError("message must carry qubits xor bits");
    long round = 0;
    if (!messages.empty()) {
        round = messages.back().round;
        if (messages.back().sender != sender) ++round;
    }
    messages.push_back(Message{sender, receiver, qubits, bits, round});
}

LedgerTotals MessageLedger::totals() const {
    LedgerTotals t;
    for (const auto& m : messages) {
        t.qubits_sent += m.qubit_count;
        t.bits_sent += m.bit_count;
        t.rounds = std::max(t.rounds, m.round);
    }
    return t;
}

LedgerTotals ledger_report(const MessageLedger& ledger) { return ledger.totals(); }

DistributedState::DistributedState(Topology topology, std::vector<Register> registers)
    : topo_(topology), regs_(std::move(registers)) {
    long d = 1;
    for (const auto& r : regs_) {
        if (r.dim < 1) throw ContractError("register dimension must be positive");
        d *= r.dim;
    }
    amps_ = Vector::Zero(d);
    amps_(0) = 1.0;
}

void DistributedState::set_amplitudes(const Vector& amps) {
    if (amps.size() != amps_.size())
        throw ContractError("set_amplitudes: dimension mismatch");
    if (std::abs(amps.norm() - 1.0) > 1e-9)
        throw ContractError("set_amplitudes: state must be normalized");
    amps_ = amps;
}

long DistributedState::register_index(const std::string& name) const {
    for (size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name == name) return static_cast<long>(i);
    throw ContractError("unknown register: " + name);
}

int DistributedState::owner_of(const std::string& name) const {
    return regs_[static_cast<size_t>(register_index(name))].owner;
}

void DistributedState::apply(const Matrix& op, const std::vector<std::string>& reg_names,
                             std::optional<int> actor) {
    std::vector<long> idx;
    long sub = 1;
    for (const auto& name : reg_names) {
        long i = register_index(name);
        idx.push_back(i);
        sub *= regs_[static_cast<size_t>(i)].dim;
        if (actor && regs_[static_cast<size_t>(i)].owner != *actor)
            throw ContractError("actor does not own register " + name);
    }
    if (op.rows() != sub || op.cols() != sub)
        throw ContractError("apply: operator dimension mismatch");

    // Strides of each register in the joint index.
    std::vector<long> stride(regs_.size(), 1);
    for (long i = static_cast<long>(regs_.size()) - 2; i >= 0; --i)
        stride[static_cast<size_t>(i)] =
            stride[static_cast<size_t>(i + 1)] * regs_[static_cast<size_t>(i + 1)].dim;

    // Enumerate the complement of the target registers; within each slice the
    // operator acts densely.
    std::vector<long> target_strides;
    std::vector<long> target_dims;
    for (long i : idx) {
        target_strides.push_back(stride[static_cast<size_t>(i)]);
        target_dims.push_back(regs_[static_cast<size_t>(i)].dim);
    }

    std::vector<long> offsets;  // joint offsets of the sub-basis
    offsets.assign(static_cast<size_t>(sub), 0);
    for (long s = 0; s < sub; ++s) {
        long rem = s, off = 0;
        for (long t = static_cast<long>(idx.size()) - 1; t >= 0; --t) {
            long d = target_dims[static_cast<size_t>(t)];
            off += (rem % d) * target_strides[static_cast<size_t>(t)];
            rem /= d;
        }
        offsets[static_cast<size_t>(s)] = off;
    }

    std::vector<bool> is_target(regs_.size(), false);
    for (long i : idx) is_target[static_cast<size_t>(i)] = true;
    long outer = dim() / sub;

    Vector next = amps_;
    std::vector<long> digits(regs_.size(), 0);
    Vector slice(sub);
    for (long o = 0; o < outer; ++o) {
        // o-th joint index with all target digits zero.
        long rem = o, base = 0;
        for (long i = static_cast<long>(regs_.size()) - 1; i >= 0; --i) {
            if (is_target[static_cast<size_t>(i)]) continue;
            long d = regs_[static_cast<size_t>(i)].dim;
            base += (rem % d) * stride[static_cast<size_t>(i)];
            rem /= d;
        }
        for (long s = 0; s < sub; ++s) slice(s) = amps_(base + offsets[static_cast<size_t>(s)]);
        slice = op * slice;
        for (long s = 0; s < sub; ++s) next(base + offsets[static_cast<size_t>(s)]) = slice(s);
    }
    amps_ = std::move(next);

    if (op_log_) op_log_->push_back(AppliedOp{op, reg_names});
}

double DistributedState::project_prob(const std::string& reg_name, long value) const {
    long i = register_index(reg_name);
    std::vector<long> stride(regs_.size(), 1);
    for (long k = static_cast<long>(regs_.size()) - 2; k >= 0; --k)
        stride[static_cast<size_t>(k)] =
            stride[static_cast<size_t>(k + 1)] * regs_[static_cast<size_t>(k + 1)].dim;
    double p = 0.0;
    for (long j = 0; j < dim(); ++j) {
        long digit = (j / stride[static_cast<size_t>(i)]) % regs_[static_cast<size_t>(i)].dim;
        if (digit == value) p += std::norm(amps_(j));
    }
    return p;
}

DistributedState DistributedState::projected(const std::string& reg_name, long value) const {
    long i = register_index(reg_name);
    std::vector<long> stride(regs_.size(), 1);
    for (long k = static_cast<long>(regs_.size()) - 2; k >= 0; --k)
        stride[static_cast<size_t>(k)] =
            stride[static_cast<size_t>(k + 1)] * regs_[static_cast<size_t>(k + 1)].dim;
    Vector out = amps_;
    for (long j = 0; j < dim(); ++j) {
        long digit = (j / stride[static_cast<size_t>(i)]) % regs_[static_cast<size_t>(i)].dim;
        if (digit != value) out(j) = 0.0;
    }
    double nrm = out.norm();
    if (nrm < 1e-300)
        throw DegenerateInputError("projected: zero-probability branch");
    DistributedState s(topo_, regs_);
    s.set_amplitudes(out / nrm);
    return s;
}

RealVector DistributedState::marginal(const std::string& reg_name) const {
    long i = register_index(reg_name);
    std::vector<long> stride(regs_.size(), 1);
    for (long k = static_cast<long>(regs_.size()) - 2; k >= 0; --k)
        stride[static_cast<size_t>(k)] =
            stride[static_cast<size_t>(k + 1)] * regs_[static_cast<size_t>(k + 1)].dim;
    RealVector out = RealVector::Zero(regs_[static_cast<size_t>(i)].dim);
    for (long j = 0; j < dim(); ++j) {
        long digit = (j / stride[static_cast<size_t>(i)]) % regs_[static_cast<size_t>(i)].dim;
        out(digit) += std::norm(amps_(j));
    }
    return out;
}

void DistributedState::send_registers(const std::vector<std::string>& reg_names, int to,
                                      MessageLedger& ledger) {
    if (reg_names.empty()) throw ContractError("send_registers: no registers named");
    int from = owner_of(reg_names.front());
    long qubits = 0;
    for (const auto& name : reg_names) {
        long i = register_index(name);
        if (regs_[static_cast<size_t>(i)].owner != from)
            throw ContractError("send_registers: registers have mixed owners");
        qubits += qubits_for_dim(regs_[static_cast<size_t>(i)].dim);
    }
    if (!topo_.direction_legal(from, to))
        throw TopologyViolation("illegal direction " + std::to_string(from) + " -> " +
                                std::to_string(to) + " in " + topology_name(topo_.kind));
    for (const auto& name : reg_names)
        regs_[static_cast<size_t>(register_index(name))].owner = to;
    ledger.record(from, to, qubits, 0);
}

void send_classical(long payload_bits, int from, int to, const Topology& topo,
                    MessageLedger& ledger) {
    if (payload_bits <= 0)
        throw ContractError("send_classical: zero-length payload");
    if (!topo.direction_legal(from, to))
        throw TopologyViolation("illegal classical direction in " +
                                topology_name(topo.kind));
    ledger.record(from, to, 0, payload_bits);
}

void remote_apply(DistributedState& state, int owner, const Matrix& unitary,
                  const std::vector<std::string>& reg_names, MessageLedger& ledger) {
    for (const auto& name : reg_names)
        if (state.owner_of(name) != kReferee)
            throw ContractError("remote_apply: registers must sit at the referee");
    state.send_registers(reg_names, owner, ledger);
    state.apply(unitary, reg_names, owner);
    state.send_registers(reg_names, kReferee, ledger);
}

long bits_per_entry(long mn) {
    return std::max<long>(1, ceil_log2(std::max<long>(2, mn)));
}

}  // namespace qcs
