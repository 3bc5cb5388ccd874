#include "textlift/digest.hpp"

#include "textlift/errors.hpp"

#include <openssl/evp.h>

namespace textlift {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw internal_error("DigestFailed", "EVP_Digest returned an error");
    static const char* hexd = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hexd[md[i] >> 4]);
        out.push_back(hexd[md[i] & 0x0F]);
    }
    return out;
}

} // namespace textlift
