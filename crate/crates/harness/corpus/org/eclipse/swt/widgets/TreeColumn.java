package org.eclipse.swt.widgets;

public class TreeColumn {
    public void setFont(Font value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.font = value;
        redraw();
    }

    public void setBackground(Color value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.background = value;
        redraw();
    }

    public void setForeground(Color value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.foreground = value;
        redraw();
    }

    public void setImage(Image value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.image = value;
        redraw();
    }

    public void setText(String value) {
        checkWidget();
        if (value != null && value.isDisposed()) error(SWT.ERROR_INVALID_ARGUMENT);
        this.text = value;
        redraw();
    }
}
