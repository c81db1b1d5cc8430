// digest.hpp
// Incremental SHA-256 over emitted witness bytes (OpenSSL EVP).

#pragma once

#include <array>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <openssl/evp.h>

namespace pairjac {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("Sha256: EVP init failed");
    }

    Sha256(const Sha256& other) : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_MD_CTX_copy_ex(ctx_.get(), other.ctx_.get()) != 1)
            throw std::runtime_error("Sha256: EVP copy failed");
    }
    Sha256& operator=(const Sha256& other) {
        if (this != &other) *this = Sha256(other);
        return *this;
    }
    Sha256(Sha256&&) noexcept = default;
    Sha256& operator=(Sha256&&) noexcept = default;

    void update(std::string_view bytes) {
        if (EVP_DigestUpdate(ctx_.get(), bytes.data(), bytes.size()) != 1)
            throw std::runtime_error("Sha256: EVP update failed");
    }

    // Hex digest of everything seen so far; the running state is left untouched.
    std::string hex() const {
        Sha256 copy(*this);
        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(copy.ctx_.get(), md.data(), &len) != 1)
            throw std::runtime_error("Sha256: EVP final failed");
        std::string out;
        out.reserve(2 * len);
        char buf[3];
        for (unsigned i = 0; i < len; ++i) {
            std::snprintf(buf, sizeof buf, "%02x", md[i]);
            out += buf;
        }
        return out;
    }

    static std::string of(std::string_view bytes) {
        Sha256 h;
        h.update(bytes);
        return h.hex();
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

} // namespace pairjac
