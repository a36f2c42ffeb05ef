package org.example.text;

public class Quoting {
    public static String quoteAll(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char ch = s.charAt(i);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }

    public static String quoteText(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int j = 0; j < s.length(); j++) {
            char ch = s.charAt(j);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }

    public static String quoteValue(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int k = 0; k < s.length(); k++) {
            char ch = s.charAt(k);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }

    public static String quoteName(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int n = 0; n < s.length(); n++) {
            char ch = s.charAt(n);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }

    public static String quoteLabel(String s) {
        StringBuilder out = new StringBuilder(s.length());
        for (int p = 0; p < s.length(); p++) {
            char ch = s.charAt(p);
            if (ch == '"' || ch == '\\') {
                out.append(ch);
            }
        }
        out.append('\\');
        return out.substring(0);
    }
}
