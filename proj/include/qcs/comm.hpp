#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcs/types.hpp"

namespace qcs {

// Party ids are 0..party_count-1; the referee is kReferee.
constexpr int kReferee = -1;

enum class TopologyKind {
    TwoPartyOneWayAtoB,
    TwoPartyOneWayBtoA,
    TwoPartyTwoWay,
    Smp,
    Coordinator,
};

struct Topology {
    TopologyKind kind = TopologyKind::TwoPartyTwoWay;
    int party_count = 2;

    static Topology two_party(TopologyKind k);
    static Topology smp(int parties);
    static Topology coordinator(int parties);

    bool direction_legal(int from, int to) const;
};

std::string topology_name(TopologyKind kind);

struct Message {
    int sender = 0;
    int receiver = 0;
    long qubit_count = 0;
    long bit_count = 0;
    long round = 0;
};

struct LedgerTotals {
    long qubits_sent = 0;
    long bits_sent = 0;
    long rounds = 0;
};

struct MessageLedger {
    std::vector<Message> messages;

    void record(int sender, int receiver, long qubits, long bits);
    LedgerTotals totals() const;
};

LedgerTotals ledger_report(const MessageLedger& ledger);

// One named register of arbitrary dimension with an owner.
struct Register {
    std::string name;
    long dim = 2;
    int owner = kReferee;
};

// Optional record of every unitary applied during a run, for replaying the
// same algebra in one address space (no ownership, no messages).
struct AppliedOp {
    Matrix op;
    std::vector<std::string> registers;
};

// Joint state over an ordered list of registers (amplitude index is
// big-endian in register order). Local unitaries may only touch registers
// with a single common owner; moving registers between owners is a ledger
// event, not an amplitude change.
class DistributedState {
  public:
    DistributedState(Topology topology, std::vector<Register> registers);

    // Amplitudes start as |0...0>; use set_amplitudes for other inputs.
    void set_amplitudes(const Vector& amps);
    const Vector& amplitudes() const { return amps_; }

    const std::vector<Register>& registers() const { return regs_; }
    long dim() const { return amps_.size(); }
    long register_index(const std::string& name) const;
    int owner_of(const std::string& name) const;

    // Applies `op` to the listed registers (tensor order as listed), checking
    // that one actor owns them all. actor = kReferee or a party id; pass
    // std::nullopt to skip the ownership check (monolithic replay).
    void apply(const Matrix& op, const std::vector<std::string>& reg_names,
               std::optional<int> actor);

    void set_op_log(std::vector<AppliedOp>* log) { op_log_ = log; }

    // Probability of the given register holding `value`, and the normalized
    // conditional state after projecting on it.
    double project_prob(const std::string& reg_name, long value) const;
    DistributedState projected(const std::string& reg_name, long value) const;

    // Marginal distribution over one register's basis.
    RealVector marginal(const std::string& reg_name) const;

    // Ownership transfer; ledger records the qubit width of the registers.
    void send_registers(const std::vector<std::string>& reg_names, int to,
                        MessageLedger& ledger);

    const Topology& topology() const { return topo_; }

  private:
    Topology topo_;
    std::vector<Register> regs_;
    Vector amps_;
    std::vector<AppliedOp>* op_log_ = nullptr;
};

// Classical message (bits only). Zero-length payloads are rejected.
void send_classical(long payload_bits, int from, int to, const Topology& topo,
                    MessageLedger& ledger);

// Referee->owner shuttle, local unitary at the owner, shuttle back. Charges
// two transfers of the registers' total qubit width.
void remote_apply(DistributedState& state, int owner, const Matrix& unitary,
                  const std::vector<std::string>& reg_names, MessageLedger& ledger);

// Bits used to encode one matrix/vector entry or norm (O(log mn) model).
long bits_per_entry(long mn);

}  // namespace qcs
