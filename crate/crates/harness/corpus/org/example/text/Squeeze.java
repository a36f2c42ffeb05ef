package org.example.text;

public class Squeeze {
    public static String stripSpaces(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char ch = s.charAt(i);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }

    public static String stripBlanks(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int j = 0; j < s.length(); j++) {
            char ch = s.charAt(j);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }

    public static String stripGaps(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int k = 0; k < s.length(); k++) {
            char ch = s.charAt(k);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }

    public static String stripPadding(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int n = 0; n < s.length(); n++) {
            char ch = s.charAt(n);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }

    public static String stripWhite(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int p = 0; p < s.length(); p++) {
            char ch = s.charAt(p);
            if (Character.isWhitespace(ch)) {
                continue;
            }
            out.append(ch);
        }
        return out.substring(0);
    }
}
