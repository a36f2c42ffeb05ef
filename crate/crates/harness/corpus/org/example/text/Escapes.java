package org.example.text;

public class Escapes {
    public static String escapeQuotes(String s) {
        if (s == null) return null;
        StringBuilder buf = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (c == '"' || c == '\\') {
                buf.append('\\');
            }
            buf.append(c);
        }
        return buf.toString();
    }

    public static String quoteString(String text) {
        if (text == null) return null;
        StringBuilder out = new StringBuilder(text.length());
        for (int j = 0; j < text.length(); j++) {
            char ch = text.charAt(j);
            if (ch == '"' || ch == '\\') {
                out.append('\\');
            }
            out.append(ch);
        }
        return out.toString();
    }

    public static String escapeLiteral(String value) {
        if (value == null) return null;
        StringBuilder sb = new StringBuilder(value.length());
        for (int k = 0; k < value.length(); k++) {
            char c = value.charAt(k);
            if (c == '"' || c == '\\') {
                sb.append('\\');
            }
            sb.append(c);
        }
        return sb.toString();
    }

    public static String encodeJavaString(String str) {
        if (str == null) return null;
        StringBuilder result = new StringBuilder(str.length());
        for (int n = 0; n < str.length(); n++) {
            char c = str.charAt(n);
            if (c == '"' || c == '\\') {
                result.append('\\');
            }
            result.append(c);
        }
        return result.toString();
    }

    public static String escapeJson(String json) {
        if (json == null) return null;
        StringBuilder builder = new StringBuilder(json.length());
        for (int p = 0; p < json.length(); p++) {
            char next = json.charAt(p);
            if (next == '"' || next == '\\') {
                builder.append('\\');
            }
            builder.append(next);
        }
        return builder.toString();
    }

    public static String escapeNonNull(String s) {
        StringBuilder buf = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (c == '"' || c == '\\') {
                buf.append('\\');
            }
            buf.append(c);
        }
        return buf.toString();
    }
}
