#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cabba/frame.hpp"
#include "cabba/pki.hpp"
#include "cabba/tesla.hpp"

namespace cabba {

// Per-transmitter authentication ladder.
//   S0 nothing seen, S1 interval key held, S2 signed key held,
//   S3 certificate held, S4 fully authenticated (cert valid under the
//   CA and a disclosed key valid under the cert).
// S4 requires both checks; a failing certificate or key signature
// leaves the state where it was.
enum class RxState { S0, S1, S2, S3, S4 };

enum class Integrity { unknown, ok, failed };

enum class StreamVerdict { unverified, authenticated, impostor_candidate };

struct ReceiverConfig {
    PublicKey256 ca_pub{};
    std::uint32_t buffer_horizon = 3;   // intervals a message may wait for its key
    std::uint32_t max_chain_walk = 720; // longest hash walk when matching streams
};

// One disclosed-key lineage. Keys from the same chain are linked by
// hash-walking the later key down to the earlier one; keys that do not
// link start a second stream, which flags an impostor transmitting
// under the same address.
struct KeyStream {
    std::uint64_t id = 0;
    StreamVerdict verdict = StreamVerdict::unverified;
    std::map<std::uint32_t, Key128> keys;  // interval -> disclosed key
};

struct MessageRecord {
    AdsbFrame adsb{};
    BitVec mac_bits;
    std::uint8_t seq = 0;
    std::uint32_t interval = 0;  // interval the message was received in
    Integrity integrity = Integrity::unknown;
    bool authenticated_origin = false;
    bool duplicate = false;
    bool expired = false;
    std::optional<std::uint64_t> stream_id;
};

struct VerdictUpdate {
    std::uint32_t interval = 0;
    std::uint8_t seq = 0;
    Integrity integrity = Integrity::unknown;
    bool authenticated_origin = false;
    std::optional<std::uint64_t> stream_id;
    bool duplicate = false;
    bool expired = false;
};

class ReceiverContext {
  public:
    ReceiverContext(std::uint32_t icao, const ReceiverConfig& cfg);

    // Feed one decoded frame received during rx_interval. Frames whose
    // ICAO does not match are rejected with no state change. Returns
    // the message verdicts that settled or changed.
    std::vector<VerdictUpdate> ingest(const Frame& frame, std::uint32_t rx_interval);

    // MAC check of a legacy message against the key of its interval.
    static bool check_integrity(const AdsbFrame& adsb, const BitVec& mac_bits,
                                std::uint8_t seq, std::uint32_t interval,
                                const Key128& interval_key);

    // Attach a disclosed key to the stream it hash-links to, creating a
    // new stream when none links. Returns the stream id.
    std::uint64_t assign_stream(const Key128& key, std::uint32_t interval);

    // Re-evaluate the S4 condition and upgrade message origins on the
    // stream whose key carried a valid signature.
    std::vector<VerdictUpdate> authenticate_streams();

    RxState state() const { return state_; }
    std::uint32_t icao() const { return icao_; }
    const std::vector<KeyStream>& streams() const { return streams_; }
    const std::vector<MessageRecord>& settled() const { return settled_; }
    std::size_t pending_count() const { return pending_.size(); }
    std::uint32_t current_interval() const { return max_interval_seen_; }

  private:
    struct Pending {
        MessageRecord rec;
        bool failed_once = false;
    };
    struct SignedKey {
        Key128 key{};
        std::uint32_t interval = 0;
        Signature512 sig{};
    };
    struct Cert {
        PublicKey256 pub{};
        Signature512 sig{};
        bool v1 = false;
    };

    void expire_pending(std::vector<VerdictUpdate>& out);
    void verify_pending(std::vector<VerdictUpdate>& out);
    std::optional<Key128> derive_for(const KeyStream& s, std::uint32_t interval) const;
    VerdictUpdate settle(Pending&& p, Integrity integrity, std::optional<std::uint64_t> stream);
    void mark_impostors();
    void set_state(RxState next);

    std::uint32_t icao_;
    ReceiverConfig cfg_;
    RxState state_ = RxState::S0;
    std::uint32_t max_interval_seen_ = 0;
    std::uint64_t next_stream_id_ = 1;
    std::vector<KeyStream> streams_;
    std::vector<Pending> pending_;
    std::vector<MessageRecord> settled_;
    std::vector<SignedKey> signed_keys_;
    std::vector<Cert> certs_;
    std::set<std::tuple<std::uint64_t, std::uint32_t, std::uint8_t>> seen_ok_;
};

const char* rx_state_name(RxState s);
const char* integrity_name(Integrity v);
const char* stream_verdict_name(StreamVerdict v);

}  // namespace cabba
