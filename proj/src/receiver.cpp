#include "cabba/receiver.hpp"

#include <algorithm>

#include "cabba/errors.hpp"

namespace cabba {

ReceiverContext::ReceiverContext(std::uint32_t icao, const ReceiverConfig& cfg)
    : icao_(icao), cfg_(cfg) {
    if (icao > 0xFFFFFF) throw InvalidConfig("icao exceeds 24 bits");
}

bool ReceiverContext::check_integrity(const AdsbFrame& adsb, const BitVec& mac_bits,
                                      std::uint8_t seq, std::uint32_t interval,
                                      const Key128& interval_key) {
    MacTag tag;
    tag.bits = mac_bits;
    tag.seq = seq;
    tag.interval = interval;
    return verify_mac(BitVec::from_bytes(adsb.data(), kAdsbFrameBits), tag, interval_key);
}

void ReceiverContext::set_state(RxState next) {
    auto rank = [](RxState s) {
        switch (s) {
            case RxState::S0: return 0;
            case RxState::S1: return 1;
            case RxState::S2: return 2;
            case RxState::S3: return 2;
            case RxState::S4: return 3;
        }
        return 0;
    };
    if (rank(next) < rank(state_)) return;  // never descend the ladder
    state_ = next;
}

std::optional<Key128> ReceiverContext::derive_for(const KeyStream& s,
                                                  std::uint32_t interval) const {
    // Earliest stream key at or above the target interval; hash down.
    auto it = s.keys.lower_bound(interval);
    if (it == s.keys.end()) return std::nullopt;
    if (it->first - interval > cfg_.max_chain_walk) return std::nullopt;
    return f_hash_iter(it->second, it->first - interval);
}

std::uint64_t ReceiverContext::assign_stream(const Key128& key, std::uint32_t interval) {
    for (KeyStream& s : streams_) {
        auto anchor = s.keys.begin();
        const std::uint32_t ai = anchor->first;
        const Key128& ak = anchor->second;
        bool linked = false;
        if (interval == ai) {
            linked = key == ak;
        } else if (interval > ai) {
            if (interval - ai <= cfg_.max_chain_walk) linked = same_origin(ak, ai, key, interval);
        } else {
            if (ai - interval <= cfg_.max_chain_walk) linked = same_origin(key, interval, ak, ai);
        }
        if (linked) {
            s.keys.emplace(interval, key);
            return s.id;
        }
    }
    KeyStream s;
    s.id = next_stream_id_++;
    s.keys.emplace(interval, key);
    streams_.push_back(std::move(s));
    mark_impostors();
    return streams_.back().id;
}

void ReceiverContext::mark_impostors() {
    if (streams_.size() < 2) return;
    for (KeyStream& s : streams_)
        if (s.verdict != StreamVerdict::authenticated)
            s.verdict = StreamVerdict::impostor_candidate;
}

VerdictUpdate ReceiverContext::settle(Pending&& p, Integrity integrity,
                                      std::optional<std::uint64_t> stream) {
    MessageRecord rec = std::move(p.rec);
    rec.integrity = integrity;
    rec.stream_id = stream;
    if (integrity == Integrity::ok && stream) {
        auto key = std::make_tuple(*stream, rec.interval, rec.seq);
        rec.duplicate = !seen_ok_.insert(key).second;
        const KeyStream* s = nullptr;
        for (const KeyStream& ks : streams_)
            if (ks.id == *stream) s = &ks;
        rec.authenticated_origin = s && s->verdict == StreamVerdict::authenticated;
    }
    VerdictUpdate u;
    u.interval = rec.interval;
    u.seq = rec.seq;
    u.integrity = rec.integrity;
    u.authenticated_origin = rec.authenticated_origin;
    u.stream_id = rec.stream_id;
    u.duplicate = rec.duplicate;
    u.expired = rec.expired;
    settled_.push_back(std::move(rec));
    return u;
}

void ReceiverContext::expire_pending(std::vector<VerdictUpdate>& out) {
    std::vector<Pending> keep;
    keep.reserve(pending_.size());
    for (Pending& p : pending_) {
        if (max_interval_seen_ > p.rec.interval &&
            max_interval_seen_ - p.rec.interval > cfg_.buffer_horizon) {
            p.rec.expired = true;
            const Integrity verdict = p.failed_once ? Integrity::failed : Integrity::unknown;
            out.push_back(settle(std::move(p), verdict, std::nullopt));
        } else {
            keep.push_back(std::move(p));
        }
    }
    pending_ = std::move(keep);
}

void ReceiverContext::verify_pending(std::vector<VerdictUpdate>& out) {
    std::vector<Pending> keep;
    keep.reserve(pending_.size());
    for (Pending& p : pending_) {
        bool settled = false;
        for (const KeyStream& s : streams_) {
            std::optional<Key128> k = derive_for(s, p.rec.interval);
            if (!k) continue;
            if (check_integrity(p.rec.adsb, p.rec.mac_bits, p.rec.seq, p.rec.interval, *k)) {
                out.push_back(settle(std::move(p), Integrity::ok, s.id));
                settled = true;
                break;
            }
            p.failed_once = true;
        }
        if (!settled) keep.push_back(std::move(p));
    }
    pending_ = std::move(keep);
}

std::vector<VerdictUpdate> ReceiverContext::authenticate_streams() {
    std::vector<VerdictUpdate> out;
    // S4 holds exactly when some certificate passes the CA check and
    // some signed key verifies under that certificate's public key.
    for (const Cert& c : certs_) {
        if (!c.v1) continue;
        for (const SignedKey& sk : signed_keys_) {
            if (!verify_interval_key(c.pub, sk.sig, sk.key)) continue;
            set_state(RxState::S4);
            const std::uint64_t sid = assign_stream(sk.key, sk.interval);
            for (KeyStream& s : streams_)
                if (s.id == sid) s.verdict = StreamVerdict::authenticated;
            mark_impostors();
            for (MessageRecord& rec : settled_) {
                if (rec.stream_id == sid && rec.integrity == Integrity::ok &&
                    !rec.authenticated_origin) {
                    rec.authenticated_origin = true;
                    VerdictUpdate u;
                    u.interval = rec.interval;
                    u.seq = rec.seq;
                    u.integrity = rec.integrity;
                    u.authenticated_origin = true;
                    u.stream_id = rec.stream_id;
                    u.duplicate = rec.duplicate;
                    out.push_back(u);
                }
            }
        }
    }
    return out;
}

std::vector<VerdictUpdate> ReceiverContext::ingest(const Frame& frame,
                                                   std::uint32_t rx_interval) {
    std::vector<VerdictUpdate> out;
    if (frame_icao(frame) != icao_) return out;  // rejected, no state change
    max_interval_seen_ = std::max(max_interval_seen_, rx_interval);
    expire_pending(out);

    switch (frame_type(frame)) {
        case FrameType::A: {
            const auto& a = std::get<FrameA>(frame);
            Pending p;
            p.rec.adsb = a.adsb;
            p.rec.mac_bits = a.mac_bits;
            p.rec.seq = a.seq;
            p.rec.interval = rx_interval;
            pending_.push_back(std::move(p));
            verify_pending(out);
            break;
        }
        case FrameType::B1: {
            const auto& b = std::get<FrameB1>(frame);
            assign_stream(b.key, b.interval);
            if (state_ == RxState::S0) set_state(RxState::S1);
            verify_pending(out);
            break;
        }
        case FrameType::B2: {
            const auto& b = std::get<FrameB2>(frame);
            assign_stream(b.key, b.interval);
            signed_keys_.push_back({b.key, b.interval, b.sig});
            if (state_ == RxState::S0 || state_ == RxState::S1) set_state(RxState::S2);
            std::vector<VerdictUpdate> up = authenticate_streams();
            out.insert(out.end(), up.begin(), up.end());
            verify_pending(out);
            break;
        }
        case FrameType::C: {
            const auto& c = std::get<FrameC>(frame);
            Cert cert;
            cert.pub = c.pubkey;
            cert.sig = c.sig;
            cert.v1 = verify_certificate(cfg_.ca_pub, c.sig, c.pubkey);
            certs_.push_back(cert);
            if (state_ == RxState::S0 || state_ == RxState::S1) set_state(RxState::S3);
            std::vector<VerdictUpdate> up = authenticate_streams();
            out.insert(out.end(), up.begin(), up.end());
            break;
        }
    }
    return out;
}

const char* rx_state_name(RxState s) {
    switch (s) {
        case RxState::S0: return "S0";
        case RxState::S1: return "S1";
        case RxState::S2: return "S2";
        case RxState::S3: return "S3";
        case RxState::S4: return "S4";
    }
    return "?";
}

const char* integrity_name(Integrity v) {
    switch (v) {
        case Integrity::unknown: return "unknown";
        case Integrity::ok: return "ok";
        case Integrity::failed: return "failed";
    }
    return "?";
}

const char* stream_verdict_name(StreamVerdict v) {
    switch (v) {
        case StreamVerdict::unverified: return "unverified";
        case StreamVerdict::authenticated: return "authenticated";
        case StreamVerdict::impostor_candidate: return "impostor_candidate";
    }
    return "?";
}

}  // namespace cabba
